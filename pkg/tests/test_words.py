import pytest

from derived_skein.words import (free_reduce, concat, inverse, parse_word,
                                 word_str, cyclic_reduce, conj_class,
                                 occurrences, max_generator)


def test_parse_and_print_roundtrip():
    w = parse_word("abAB")
    assert w == ((1, 1), (2, 1), (1, -1), (2, -1))
    assert word_str(w) == "abAB"


def test_free_reduction_cancels():
    assert parse_word("aA") == ()
    assert parse_word("abBA") == ()
    assert free_reduce([(1, 1), (2, 1), (2, -1), (1, 1)]) == ((1, 1), (1, 1))


def test_concat_and_inverse():
    u = parse_word("ab")
    assert concat(u, inverse(u)) == ()
    assert inverse(u) == parse_word("BA")


def test_cyclic_reduce():
    assert cyclic_reduce(parse_word("Baab")) == parse_word("aa")
    assert cyclic_reduce(parse_word("aBA")) == parse_word("B")


def test_conj_class_invariance():
    w = parse_word("aabAB")
    classes = {conj_class(w)}
    for k in range(len(w)):
        classes.add(conj_class(w[k:] + w[:k]))
    classes.add(conj_class(inverse(w)))
    classes.add(conj_class(concat(parse_word("bA"), w, parse_word("aB"))))
    assert len(classes) == 1


def test_occurrences():
    w = parse_word("abAcA")
    assert occurrences(w, 1) == [(0, 1), (2, -1), (4, -1)]
    assert occurrences(w, 3) == [(3, 1)]
    assert occurrences(w, 2) == [(1, 1)]
    assert max_generator(w) == 3


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_word("a1b")
