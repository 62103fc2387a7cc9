import numpy as np
import pytest

from derived_skein import skein, sl2
from derived_skein.rings import LaurentPoly, QQi
from derived_skein.words import parse_word, conj_class, inverse
from derived_skein.suites import (unknot_diagram, kink_diagram,
                                  trefoil_diagram, two_curve_diagram,
                                  random_diagram)


def single(word_string, coeff):
    return skein.SkeinElement.single([conj_class(parse_word(word_string))],
                                     coeff)


def test_unknot():
    assert skein.resolve(unknot_diagram()) == single("a", LaurentPoly.one())


def test_trivial_loop_relation():
    d = skein.Diagram(1, [], [], [(), parse_word("a")])
    loop_value = -(LaurentPoly.t_power(2) + LaurentPoly.t_power(-2))
    assert skein.resolve(d) == single("a", loop_value)


def test_kink_values_pin_the_convention():
    w = parse_word("a")
    assert skein.resolve(kink_diagram(w)) == single("a", -LaurentPoly.t_power(3))
    assert skein.resolve(kink_diagram(w, positive=False)) == \
        single("a", -LaurentPoly.t_power(-3))


def test_trefoil_bracket():
    got = skein.resolve(trefoil_diagram())
    expected = skein.SkeinElement({(): (LaurentPoly.t_power(7)
                                        + LaurentPoly.t_power(3)
                                        + LaurentPoly.t_power(-1)
                                        - LaurentPoly.t_power(-9))})
    assert got == expected
    assert got == skein.resolve_oracle(trefoil_diagram())


def test_oracle_equivalence_random():
    rng = np.random.default_rng(5)
    for _ in range(30):
        d = random_diagram(rng, int(rng.integers(1, 6)))
        assert skein.resolve(d) == skein.resolve_oracle(d)


def test_kauffman_relation_every_crossing():
    rng = np.random.default_rng(6)
    for _ in range(10):
        d = random_diagram(rng, int(rng.integers(2, 5)))
        full = skein.resolve(d)
        for c in range(len(d.crossings)):
            lhs = (skein.resolve(skein.smooth_crossing(d, c, "A"))
                   .scaled(LaurentPoly.t_power(1))
                   + skein.resolve(skein.smooth_crossing(d, c, "B"))
                   .scaled(LaurentPoly.t_power(-1)))
            assert lhs == full


def test_evaluate_is_loop_class_function():
    rng = np.random.default_rng(8)
    w = parse_word("abAbb")
    rho = sl2.random_representation(rng, 2)
    base = skein.evaluate(skein.SkeinElement.single([w], 1), rho)
    for v in (w[3:] + w[:3], inverse(w)):
        other = skein.evaluate(skein.SkeinElement.single([v], 1), rho)
        assert abs(complex(base.value) - complex(other.value)) < 1e-10


def test_malformed_diagrams_rejected():
    with pytest.raises(skein.MalformedDiagramError):
        skein.Diagram(1, ["02"], [], [])  # dangling ports
    with pytest.raises(skein.MalformedDiagramError):
        skein.Diagram(1, ["20"], [], [])  # bad over flag
    with pytest.raises(skein.MalformedDiagramError):
        skein.Diagram(1, ["02"],
                      [skein.Edge((0, 0), (0, 1), ()),
                       skein.Edge((0, 1), (0, 2), ()),
                       skein.Edge((0, 3), (0, 3), ())], [])  # reused port


def test_load_diagram_roundtrip_and_errors():
    d = skein.load_diagram(
        '{"genus": 1, "crossings": [{"over": "02"}], '
        '"edges": [{"from": [0, 1], "to": [0, 2]}, '
        '{"from": [0, 3], "to": [0, 0], "label": "a"}], "free_loops": []}')
    assert skein.resolve(d) == single("a", -LaurentPoly.t_power(3))
    with pytest.raises(skein.MalformedDiagramError):
        skein.load_diagram('{"crossings": [{"flag": "02"}]}')


def test_goldman_torus_case():
    d, tags = two_curve_diagram([parse_word("a"), parse_word("b")])
    g = skein.goldman_bracket(d, tags)
    expected = (single("ab", QQi.of(2)) + single("aB", QQi.of(-2)))
    assert g == expected or g == -expected


def test_goldman_antisymmetry():
    rng = np.random.default_rng(9)
    for s in range(20):
        crossings = 1 if s % 2 == 0 else 2
        labels = [sl2.random_word(rng, 2, int(rng.integers(1, 4)))
                  for _ in range(2 * crossings)]
        d, tags = two_curve_diagram(labels, crossings)
        swapped = ["beta" if t == "alpha" else "alpha" for t in tags]
        assert skein.goldman_bracket(d, tags) == \
            -skein.goldman_bracket(d, swapped)


def test_handle_slide_shape():
    w = parse_word("abAb")
    d_sum, d_plain = skein.build_handle_slide(w, 2, 1)
    # one crossing per occurrence of the generator, including the banded one
    assert len(d_sum.crossings) == 2
    assert d_plain.free_loops == [w]
    with pytest.raises(skein.NoOccurrenceError):
        skein.build_handle_slide(w, 3, 1)
    with pytest.raises(skein.NoOccurrenceError):
        skein.build_handle_slide(w, 2, 5)


def test_handle_slide_value_part_vanishes():
    rng = np.random.default_rng(10)
    w = parse_word("abAbb")
    rho = sl2.random_representation(rng, 2)
    d_sum, d_plain = skein.build_handle_slide(w, 2, 2)
    diff = (skein.resolve(d_sum, ring="dual")
            - skein.resolve(d_plain, ring="dual"))
    val = skein.evaluate(diff, rho)
    assert abs(complex(val.value)) < 1e-9 * (1 + abs(complex(val.deriv)))


def test_handle_slide_order_independence():
    rng = np.random.default_rng(11)
    w = parse_word("aabAa")  # reduces to aab
    rho = sl2.random_representation(rng, 2)
    import itertools
    results = []
    m = len(skein.occurrences(w, 1))
    for perm in itertools.permutations(range(1, m + 1)):
        d_sum, d_plain = skein.build_handle_slide(w, 1, 2, order=list(perm))
        diff = (skein.resolve(d_sum, ring="dual")
                - skein.resolve(d_plain, ring="dual"))
        results.append(complex(skein.evaluate(diff, rho).deriv))
    assert max(abs(r - results[0]) for r in results) < 1e-9 * (1 + abs(results[0]))
