"""End-to-end acceptance checks: exact ring reduction, skein oracle
equivalence, Goldman extraction, quantum torus calculus, the transport
identity at scale, closed-form cross-checks, divergence oracles, the
self-linking identities, and byte-level determinism of the CLI."""

import io
import time

import numpy as np
import pytest

from derived_skein import cli, quantum_torus as qt, selflink, sl2, skein, \
    transport
from derived_skein.rings import LaurentPoly, QQi, eval_dual
from derived_skein.words import parse_word, conj_class
from derived_skein.suites import (unknot_diagram, kink_diagram,
                                  trefoil_diagram, two_curve_diagram,
                                  random_diagram, random_torus,
                                  _product_rule_holds, sample_transport_cases)


def test_criterion_1_dual_ring_reduction():
    start = time.time()
    for n in range(-20, 21):
        d = eval_dual(LaurentPoly.t_power(n))
        sign = (-1) ** (n % 2)
        assert d.value == QQi.of(sign)
        assert d.deriv == QQi.of(-n * sign)
    d = eval_dual(LaurentPoly.t_power(2) + LaurentPoly.t_power(-2))
    assert d.value == QQi.of(2) and d.deriv == QQi.of(0)
    assert time.time() - start < 1.0


def test_criterion_2_oracle_equivalence_and_kink():
    start = time.time()
    rng = np.random.default_rng(101)
    diagrams = [unknot_diagram(), kink_diagram(parse_word("a")),
                trefoil_diagram()]
    diagrams += [random_diagram(rng, int(rng.integers(1, 6)))
                 for _ in range(10)]
    for d in diagrams:
        assert skein.resolve(d) == skein.resolve_oracle(d)
    kink = skein.resolve(kink_diagram(parse_word("a")))
    assert kink == skein.SkeinElement.single(
        [conj_class(parse_word("a"))], -LaurentPoly.t_power(3))
    assert time.time() - start < 5.0


def test_criterion_3_goldman_extraction():
    # the zeroth-order vanishing is asserted inside goldman_bracket itself
    d, tags = two_curve_diagram([parse_word("a"), parse_word("b")])
    g = skein.goldman_bracket(d, tags)
    expected = (skein.SkeinElement.single([conj_class(parse_word("ab"))],
                                          QQi.of(2))
                + skein.SkeinElement.single([conj_class(parse_word("aB"))],
                                            QQi.of(-2)))
    assert g == expected or g == -expected
    rng = np.random.default_rng(102)
    for s in range(20):
        crossings = 1 if s % 2 == 0 else 2
        labels = [sl2.random_word(rng, 2, int(rng.integers(1, 4)))
                  for _ in range(2 * crossings)]
        d, tags = two_curve_diagram(labels, crossings)
        swapped = ["beta" if t == "alpha" else "alpha" for t in tags]
        assert skein.goldman_bracket(d, tags) == \
            -skein.goldman_bracket(d, swapped)


def test_criterion_4_quantum_torus():
    # monomial bracket vs the independent quantum-torus commutator, all
    # exponents up to 5 in absolute value, exact
    rng = np.random.default_rng(103)
    span = range(-5, 6)
    for a in span:
        for b in span:
            p = qt.TorusElement.monomial(a, b)
            for c in span:
                for d in span:
                    q = qt.TorusElement.monomial(c, d)
                    bracket = qt.poisson_bracket(qt.symbol0(p), qt.symbol0(q))
                    assert bracket == qt.CommutativeLM.monomial(
                        a + c, b + d, 2 * (b * c - a * d))
                    comm = qt.dual_image(p * q - q * p)
                    eps = {ab: v.deriv for ab, v in comm.items() if v.deriv}
                    assert eps == bracket.terms
    for _ in range(100):
        assert _product_rule_holds(random_torus(rng), random_torus(rng))
    const = qt.RSequence(-5, [LaurentPoly.one()] * 10)
    shift = (qt.TorusElement.monomial(1, 0)
             - qt.TorusElement.monomial(0, 0))
    assert all(not v for v in qt.act(shift, const).values)
    quad = qt.RSequence(-5, [LaurentPoly.t_power(n * (n + 1))
                             for n in range(-5, 5)])
    op = (qt.TorusElement.monomial(1, 0)
          - qt.TorusElement.monomial(0, 1, LaurentPoly.t_power(2)))
    assert all(not v for v in qt.act(op, quad).values)


def test_criterion_5_transport_identity_at_scale():
    start = time.time()
    kappa = transport.default_kappa()
    rng = np.random.default_rng(104)
    count = 0
    for w, i, k, rho in sample_transport_cases(rng, words_per_genus=30,
                                               reps_per_word=20):
        rep = transport.transport_residual(w, i, k, rho, kappa, sample=count)
        assert abs(rep.residual) < 1e-8 * rep.scale, rep.word
        assert abs(rep.f_value) < 1e-9 * rep.scale, rep.word
        count += 1
    assert count >= 1800
    assert time.time() - start < 60.0


def test_criterion_6_engine_vs_closed_form():
    rng = np.random.default_rng(105)
    checked = 0
    while checked < 50:
        genus = int(rng.integers(1, 4))
        w = sl2.random_word(rng, genus, int(rng.integers(2, 9)))
        choices = [(i, k + 1) for i in range(1, genus + 1)
                   for k in range(len(skein.occurrences(w, i)))]
        if not choices:
            continue
        i, k = choices[int(rng.integers(len(choices)))]
        rho = sl2.random_representation(rng, genus)
        _, fp = transport.f_and_fprime(w, i, k, rho)
        closed = transport.fprime_closed_form(w, i, k, rho)
        assert abs(fp - closed) < 1e-9 * (1 + abs(fp) + abs(closed))
        checked += 1


def test_criterion_7_divergence():
    rng = np.random.default_rng(106)
    for _ in range(100):
        genus = int(rng.integers(1, 4))
        w = sl2.random_word(rng, genus, int(rng.integers(1, 9)))
        i = int(rng.integers(1, genus + 1))
        rho = sl2.random_representation(rng, genus)
        d = sl2.divergence(w, rho, i)
        fd = sl2.fd_divergence(w, rho, i)
        assert abs(d - fd) / (1 + abs(d)) < 1e-5
    for _ in range(10):
        a = sl2.random_sl2(rng)
        rho = sl2.Representation([a])
        tr = np.trace(sl2.occurrence_endomorphism(((1, 1),), rho, 1, 0))
        assert abs(tr - 1.5 * np.trace(a)) < 1e-10


def test_criterion_8_selflink_suite():
    assert sl2.q_functional(sl2.KILLING_MATRIX) == 1.0
    rng = np.random.default_rng(107)
    for _ in range(100):
        a = sl2.random_sl2(rng)
        b = sl2.random_sl2(rng)
        q1, rhs1 = selflink.q_case_smooth(a, b)
        q2, rhs2 = selflink.q_case_split(a, b)
        assert abs(q1 - rhs1) < 1e-9 * (1 + abs(q1))
        assert abs(q2 - rhs2) < 1e-9 * (1 + abs(q2))
        assert np.array_equal(b + sl2.star(b), np.trace(b) * np.eye(2))
    for _ in range(50):
        w = sl2.random_word(rng, 2, 6)
        rho = sl2.random_representation(rng, 2)
        xi = sl2.sl2_matrix(rng.standard_normal(3)
                            + 1j * rng.standard_normal(3))
        eta = sl2.sl2_matrix(rng.standard_normal(3)
                             + 1j * rng.standard_normal(3))
        dw = selflink.DeformedWord(w, ((1, xi), (4, eta)))
        h = selflink.hessian_pair(dw, rho)
        fd = selflink.fd_hessian_pair(dw, rho)
        assert abs(h - fd) / (1 + abs(h)) < 1e-5
    checked = 0
    while checked < 100:
        rho = sl2.random_representation(rng, 2)
        alpha = sl2.random_word(rng, 2, 4)
        beta = sl2.random_word(rng, 2, 4)
        if len(alpha) < 2 or len(beta) < 2:
            continue
        xi = sl2.sl2_matrix(rng.standard_normal(3)
                            + 1j * rng.standard_normal(3))
        eta = sl2.sl2_matrix(rng.standard_normal(3)
                             + 1j * rng.standard_normal(3))
        res = selflink.trace_identity_hessian(alpha, beta, rho, (1, 1),
                                              (xi, eta))
        assert abs(res) < 1e-8
        checked += 1


def test_criterion_9_determinism():
    argv = ["suite", "all", "--seed", "1", "--samples", "3", "--json-lines"]
    outputs = []
    for _ in range(2):
        out = io.StringIO()
        code = cli.main(argv, out=out)
        assert code == 0
        outputs.append(out.getvalue())
    assert outputs[0] == outputs[1]
    assert outputs[0].strip()
