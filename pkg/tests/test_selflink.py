import numpy as np
import pytest

from derived_skein import sl2, selflink
from derived_skein.words import parse_word

RNG = np.random.default_rng(31)


def rand_tangent():
    return sl2.sl2_matrix(RNG.standard_normal(3) + 1j * RNG.standard_normal(3))


def test_deformed_word_rejects_bad_slots():
    xi = rand_tangent()
    with pytest.raises(ValueError):
        selflink.DeformedWord(parse_word("abab"), ((2, xi), (1, xi)))


def test_first_derivative_matches_fd():
    for _ in range(20):
        w = sl2.random_word(RNG, 2, 6)
        rho = sl2.random_representation(RNG, 2)
        dw = selflink.DeformedWord(w, ((2, rand_tangent()),))
        d = selflink.first_derivative(dw, rho)
        fd = selflink.fd_first_derivative(dw, rho)
        assert abs(d - fd) / (1 + abs(d)) < 1e-5


def test_hessian_matches_fd():
    for _ in range(20):
        w = sl2.random_word(RNG, 2, 6)
        rho = sl2.random_representation(RNG, 2)
        dw = selflink.DeformedWord(w, ((1, rand_tangent()),
                                       (4, rand_tangent())))
        h = selflink.hessian_pair(dw, rho)
        fd = selflink.fd_hessian_pair(dw, rho)
        assert abs(h - fd) / (1 + abs(h)) < 1e-5


def test_hessian_symmetry():
    # mixed partials commute: basing the loop at either slot gives the same value
    for _ in range(20):
        w = sl2.random_word(RNG, 2, 6)
        rho = sl2.random_representation(RNG, 2)
        xi, eta = rand_tangent(), rand_tangent()
        p, q = 1, 4
        h = selflink.hessian_pair(
            selflink.DeformedWord(w, ((p, xi), (q, eta))), rho)
        w_rot = w[p:] + w[:p]
        h_swapped = selflink.hessian_pair(
            selflink.DeformedWord(w_rot, ((0, xi), (q - p, eta))), rho)
        assert abs(h - h_swapped) < 1e-9 * (1 + abs(h))


def test_trace_identity_hessian_vanishes():
    for _ in range(30):
        rho = sl2.random_representation(RNG, 2)
        alpha = sl2.random_word(RNG, 2, 4)
        beta = sl2.random_word(RNG, 2, 4)
        if len(alpha) < 2 or len(beta) < 2:
            continue
        res = selflink.trace_identity_hessian(
            alpha, beta, rho, (1, 1), (rand_tangent(), rand_tangent()))
        assert abs(res) < 1e-8


def test_q_cases():
    for _ in range(50):
        a = sl2.random_sl2(RNG)
        b = sl2.random_sl2(RNG)
        q1, rhs1 = selflink.q_case_smooth(a, b)
        q2, rhs2 = selflink.q_case_split(a, b)
        assert abs(q1 - rhs1) < 1e-9 * (1 + abs(q1))
        assert abs(q2 - rhs2) < 1e-9 * (1 + abs(q2))
        r1, r2 = selflink.kauffman_scalar_check(a, b)
        assert abs(r1) < 1e-9 and abs(r2) < 1e-9


def test_star_identities():
    for _ in range(50):
        a = sl2.random_sl2(RNG)
        b = sl2.random_sl2(RNG)
        assert np.array_equal(b + sl2.star(b), np.trace(b) * np.eye(2))
        assert abs(np.trace(b @ a) + np.trace(sl2.star(b) @ a)
                   - np.trace(a) * np.trace(b)) < 1e-10


def test_unknot_factor():
    for _ in range(10):
        assert abs(selflink.unknot_factor_check(sl2.random_sl2(RNG))) < 1e-12
