import numpy as np
import pytest

from derived_skein import sl2
from derived_skein.words import parse_word


RNG = np.random.default_rng(7)


def test_representation_rejects_non_unimodular():
    with pytest.raises(ValueError):
        sl2.Representation([np.diag([2.0, 1.0])])


def test_random_sl2_has_unit_determinant():
    for _ in range(20):
        a = sl2.random_sl2(RNG)
        assert abs(np.linalg.det(a) - 1) < 1e-12


def test_eval_word_homomorphism():
    rho = sl2.random_representation(RNG, 2)
    u = parse_word("abA")
    v = parse_word("Bab")
    uv = sl2.eval_word(u, rho) @ sl2.eval_word(v, rho)
    assert np.allclose(uv, sl2.eval_word(u + v, rho))
    winv = sl2.eval_word(parse_word("aB"), rho)
    assert np.allclose(winv @ sl2.eval_word(parse_word("bA"), rho), np.eye(2))


def test_trace_identity():
    for _ in range(100):
        a = sl2.random_sl2(RNG)
        b = sl2.random_sl2(RNG)
        lhs = np.trace(a) * np.trace(b)
        rhs = np.trace(a @ b) + np.trace(a @ sl2.inv2(b))
        assert abs(lhs - rhs) < 1e-10


def test_star_properties():
    a = sl2.random_sl2(RNG)
    b = sl2.random_sl2(RNG)
    x = RNG.standard_normal((2, 2)) + 1j * RNG.standard_normal((2, 2))
    assert np.allclose(x + sl2.star(x), np.trace(x) * np.eye(2), atol=0)
    assert np.allclose(sl2.star(a @ b), sl2.star(b) @ sl2.star(a))
    assert np.max(np.abs(sl2.star(a) - sl2.inv2(a))) < 1e-9


def test_killing_normalization_and_invariance():
    # K(H, H) = tr(H^2)/6 = 1/3; Q(K) = 1
    assert sl2.killing(sl2.H, sl2.H) == pytest.approx(1 / 3)
    assert sl2.q_functional(sl2.KILLING_MATRIX) == pytest.approx(1.0)
    for _ in range(100):
        c = sl2.random_sl2(RNG)
        xi = sl2.sl2_matrix(RNG.standard_normal(3) + 1j * RNG.standard_normal(3))
        eta = sl2.sl2_matrix(RNG.standard_normal(3) + 1j * RNG.standard_normal(3))
        ci = sl2.inv2(c)
        assert abs(sl2.killing(c @ xi @ ci, c @ eta @ ci)
                   - sl2.killing(xi, eta)) < 1e-10


def test_project_pi_idempotent():
    phi = RNG.standard_normal((3, 3)) + 1j * RNG.standard_normal((3, 3))
    once = sl2.project_pi(phi)
    assert np.allclose(sl2.project_pi(once), once)


def test_divergence_matches_fd():
    for _ in range(20):
        genus = int(RNG.integers(1, 4))
        w = sl2.random_word(RNG, genus, int(RNG.integers(1, 9)))
        i = int(RNG.integers(1, genus + 1))
        rho = sl2.random_representation(RNG, genus)
        d = sl2.divergence(w, rho, i)
        fd = sl2.fd_divergence(w, rho, i)
        assert abs(d - fd) / (1 + abs(d)) < 1e-5


def test_single_occurrence_trace_at_identity():
    # U = V = Id: the occurrence endomorphism has trace (3/2) tr(A)
    for _ in range(10):
        a = sl2.random_sl2(RNG)
        rho = sl2.Representation([a])
        tr = np.trace(sl2.occurrence_endomorphism(((1, 1),), rho, 1, 0))
        assert abs(tr - 1.5 * np.trace(a)) < 1e-10


def test_occurrence_trace_closed_form_matches_endomorphism():
    worst = {"paper": 0.0, "alt": 0.0}
    for _ in range(50):
        genus = 2
        w = sl2.random_word(RNG, genus, 6)
        rho = sl2.random_representation(RNG, genus)
        for i in (1, 2):
            for occ in range(len(sl2.occurrences(w, i))):
                tr = np.trace(sl2.occurrence_endomorphism(w, rho, i, occ))
                for variant in worst:
                    cf = sl2.occurrence_trace_closed_form(
                        w, rho, i, occ, variant=variant)
                    worst[variant] = max(worst[variant],
                                         abs(tr - cf) / (1 + abs(tr)))
    assert worst["paper"] < 1e-12
    assert worst["alt"] > 1e-3  # the swapped transcription is wrong


def test_eval_word_conjugation_covariance():
    rho = sl2.random_representation(RNG, 2)
    c = sl2.random_sl2(RNG)
    w = parse_word("abAB")
    lhs = sl2.eval_word(w, rho.conjugate(c))
    rhs = c @ sl2.eval_word(w, rho) @ sl2.inv2(c)
    assert np.allclose(lhs, rhs)
