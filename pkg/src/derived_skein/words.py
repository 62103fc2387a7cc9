"""Freely reduced words in a rank-g free group and conjugacy-class canonical
forms (up to rotation and inversion).

String syntax: lowercase letters a,b,c,... are the generators t_1,t_2,t_3,...;
uppercase letters are their inverses ("abAB" = t1 t2 t1^-1 t2^-1).
"""

from __future__ import annotations

from typing import Iterable, Tuple

# A letter is (generator index >= 1, exponent +1 or -1); a word is a tuple.
Letter = Tuple[int, int]
Word = Tuple[Letter, ...]

EMPTY: Word = ()


def free_reduce(letters: Iterable[Letter]) -> Word:
    """Cancel adjacent inverse pairs."""
    out = []
    for g, e in letters:
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


def concat(*words: Word) -> Word:
    return free_reduce(l for w in words for l in w)


def inverse(w: Word) -> Word:
    return tuple((g, -e) for g, e in reversed(w))


def parse_word(s: str) -> Word:
    letters = []
    for ch in s.strip():
        if ch.islower():
            letters.append((ord(ch) - ord("a") + 1, 1))
        elif ch.isupper():
            letters.append((ord(ch) - ord("A") + 1, -1))
        else:
            raise ValueError(f"invalid word character {ch!r}")
    return free_reduce(letters)


def word_str(w: Word) -> str:
    out = []
    for g, e in w:
        if not 1 <= g <= 26:
            raise ValueError(f"generator index {g} has no letter form")
        ch = chr(ord("a") + g - 1)
        out.append(ch if e == 1 else ch.upper())
    return "".join(out)


def cyclic_reduce(w: Word) -> Word:
    w = free_reduce(w)
    while len(w) >= 2 and w[0][0] == w[-1][0] and w[0][1] == -w[-1][1]:
        w = free_reduce(w[1:-1])
    return w


def conj_class(w: Word) -> Word:
    """Canonical representative: lexicographically least among all rotations
    of the cyclic reduction of w and of its inverse."""
    w = cyclic_reduce(w)
    if not w:
        return EMPTY
    candidates = []
    for v in (w, inverse(w)):
        for k in range(len(v)):
            candidates.append(v[k:] + v[:k])
    return min(candidates)


def max_generator(w: Word) -> int:
    return max((g for g, _ in w), default=0)


def occurrences(w: Word, i: int):
    """Positions (0-based) in w where generator i occurs, with exponents."""
    return [(p, e) for p, (g, e) in enumerate(w) if g == i]
