"""Kauffman-bracket resolution of group-labeled 4-valent diagrams over
Z[t^±1], evaluation at SL2(C) representations, Goldman brackets via
commutators of stackings, and the handle-slide diagrams [gamma#gamma_i] -
[gamma].

Smoothing convention: rotate each crossing so the overpass runs port 0 ->
port 2 (ports counterclockwise, strands through (0-2) and (1-3)); the
t-coefficient smoothing joins (0,3),(1,2) and the t^-1 smoothing joins
(0,1),(2,3).  Pinned by the single-kink value -t^3.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np

from .rings import LaurentPoly, DualScalar, eval_dual
from .words import (Word, conj_class, concat, inverse, parse_word, word_str,
                    free_reduce, occurrences)
from . import sl2

Port = Tuple[int, int]


class MalformedDiagramError(ValueError):
    """A port is dangling or used more than once."""


class NoOccurrenceError(ValueError):
    """The word contains no occurrence of the requested generator."""


@dataclass(frozen=True)
class Edge:
    """Unoriented edge with a reference direction: the label is read from
    end0 to end1; traversal against it uses the inverse word."""

    end0: Port
    end1: Port
    label: Word

    def other(self, port: Port) -> Port:
        return self.end1 if port == self.end0 else self.end0

    def read_into(self, port: Port) -> Word:
        """Label read along a traversal ending at the given port."""
        return self.label if port == self.end1 else inverse(self.label)

    def read_from(self, port: Port) -> Word:
        """Label read along a traversal starting at the given port."""
        return self.label if port == self.end0 else inverse(self.label)


class Diagram:
    """Group-labeled 4-valent link diagram.

    crossings[c] is the over-flag "02" or "13"; every port (c, 0..3) must
    be covered by exactly one edge end.  free_loops are crossingless
    components given by their (cyclic) labels.
    """

    def __init__(self, genus: int, crossings: List[str], edges: List[Edge],
                 free_loops: List[Word]):
        self.genus = genus
        self.crossings = list(crossings)
        self.edges = list(edges)
        self.free_loops = [free_reduce(w) for w in free_loops]
        self._validate()

    def _validate(self):
        for over in self.crossings:
            if over not in ("02", "13"):
                raise MalformedDiagramError(f"bad over-flag {over!r}")
        seen = {}
        for e in self.edges:
            for port in (e.end0, e.end1):
                c, p = port
                if not (0 <= c < len(self.crossings) and 0 <= p < 4):
                    raise MalformedDiagramError(f"edge end {port} out of range")
                if port in seen:
                    raise MalformedDiagramError(f"port {port} used twice")
                seen[port] = e
        for c in range(len(self.crossings)):
            for p in range(4):
                if (c, p) not in seen:
                    raise MalformedDiagramError(f"dangling port {(c, p)}")


def _smoothing_pairs(over: str, kind: str) -> Tuple[Tuple[int, int], Tuple[int, int]]:
    """Port pairs joined by the t ("A") or t^-1 ("B") smoothing."""
    if over == "02":
        return ((0, 3), (1, 2)) if kind == "A" else ((0, 1), (2, 3))
    return ((0, 1), (2, 3)) if kind == "A" else ((1, 2), (3, 0))


LOOP_VALUE = -(LaurentPoly.t_power(2) + LaurentPoly.t_power(-2))


class SkeinElement:
    """Formal linear combination of loop multisets.

    Keys are sorted tuples of conjugacy-class canonical words (trivial
    loops already eliminated via the loop relation); coefficients live in
    whatever ring the caller chose (LaurentPoly, DualScalar, QQi, complex).
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[Tuple[Word, ...], object] = None):
        t = {}
        if terms:
            for key, c in terms.items():
                if c:
                    t[key] = c
        self.terms = t

    @staticmethod
    def zero() -> "SkeinElement":
        return SkeinElement()

    @staticmethod
    def single(loops, coeff) -> "SkeinElement":
        key = tuple(sorted(loops))
        return SkeinElement({key: coeff})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, SkeinElement) and self.terms == other.terms

    def __add__(self, other: "SkeinElement") -> "SkeinElement":
        t = dict(self.terms)
        for key, c in other.terms.items():
            if key in t:
                s = t[key] + c
                if s:
                    t[key] = s
                else:
                    del t[key]
            else:
                t[key] = c
        return SkeinElement(t)

    def __neg__(self):
        return SkeinElement({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, factor) -> "SkeinElement":
        return SkeinElement({k: factor * c for k, c in self.terms.items()})

    def map_coeffs(self, fn) -> "SkeinElement":
        return SkeinElement({k: fn(c) for k, c in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for key in sorted(self.terms):
            loops = "|".join(word_str(w) for w in key)
            parts.append(f"({self.terms[key]}) * [{loops}]")
        return " + ".join(parts)

    def __repr__(self):
        return f"SkeinElement({self})"


def _loops_to_term(loop_words, coeff: LaurentPoly):
    """Eliminate trivial loops via the loop relation; canonicalize the rest."""
    kept = []
    for w in loop_words:
        c = conj_class(w)
        if c:
            kept.append(c)
        else:
            coeff = coeff * LOOP_VALUE
    return tuple(sorted(kept)), coeff


def smooth_crossing(d: Diagram, c: int, kind: str) -> Diagram:
    """Replace crossing c by the "A" (t-coefficient) or "B" (t^-1) smoothing,
    merging the incident edges and reindexing the remaining crossings."""
    pairs = _smoothing_pairs(d.crossings[c], kind)
    edges = list(d.edges)
    free_loops = list(d.free_loops)
    for p, q in pairs:
        pp, qq = (c, p), (c, q)
        e = next(x for x in edges if pp in (x.end0, x.end1))
        f = next(x for x in edges if qq in (x.end0, x.end1))
        if e is f:
            edges.remove(e)
            free_loops.append(e.label)
            continue
        edges.remove(e)
        edges.remove(f)
        label = concat(e.read_into(pp), f.read_from(qq))
        edges.append(Edge(e.other(pp), f.other(qq), label))

    def shift(port: Port) -> Port:
        cc, p = port
        return (cc - 1, p) if cc > c else (cc, p)

    edges = [Edge(shift(e.end0), shift(e.end1), e.label) for e in edges]
    crossings = d.crossings[:c] + d.crossings[c + 1:]
    return Diagram(d.genus, crossings, edges, free_loops)


def resolve(d: Diagram, ring: str = "laurent") -> SkeinElement:
    """Full Kauffman state sum over all 2^(#crossings) smoothings.

    ring="laurent" keeps exact Z[t^±1] coefficients; ring="dual" applies
    the t -> -1+e reduction to every coefficient.
    """
    result = _resolve_rec(d)
    if ring == "dual":
        return result.map_coeffs(eval_dual)
    if ring != "laurent":
        raise ValueError(f"unknown ring {ring!r}")
    return result


def _resolve_rec(d: Diagram) -> SkeinElement:
    if not d.crossings:
        key, coeff = _loops_to_term(d.free_loops, LaurentPoly.one())
        return SkeinElement({key: coeff})
    c = len(d.crossings) - 1
    a = _resolve_rec(smooth_crossing(d, c, "A")).scaled(LaurentPoly.t_power(1))
    b = _resolve_rec(smooth_crossing(d, c, "B")).scaled(LaurentPoly.t_power(-1))
    return a + b


def resolve_oracle(d: Diagram) -> SkeinElement:
    """Independent brute-force state sum: enumerate all smoothing states
    and trace loops through the port pairing.  Shares no code with the
    recursive path."""
    n = len(d.crossings)
    at_port = {}
    for e in d.edges:
        at_port[e.end0] = e
        at_port[e.end1] = e
    total = SkeinElement.zero()
    for state in itertools.product("AB", repeat=n):
        partner = {}
        for c, kind in enumerate(state):
            for p, q in _smoothing_pairs(d.crossings[c], kind):
                partner[(c, p)] = (c, q)
                partner[(c, q)] = (c, p)
        loops = list(d.free_loops)
        visited = set()
        for e0 in d.edges:
            if id(e0) in visited:
                continue
            word: List = []
            edge, start = e0, e0.end0
            while True:
                visited.add(id(edge))
                word.extend(edge.read_from(start))
                nxt = partner[edge.other(start)]
                edge = at_port[nxt]
                start = nxt
                if edge is e0 and start == e0.end0:
                    break
            loops.append(tuple(word))
        exp = state.count("A") - state.count("B")
        key, coeff = _loops_to_term(loops, LaurentPoly.t_power(exp))
        total = total + SkeinElement({key: coeff})
    return total


def evaluate(s: SkeinElement, rho: sl2.Representation) -> DualScalar:
    """Evaluate a skein element at a representation: each loop contributes
    -tr(rho(loop)); coefficients are reduced to floating dual scalars."""
    total = DualScalar(0j, 0j)
    for key, coeff in s.terms.items():
        if isinstance(coeff, LaurentPoly):
            c = eval_dual(coeff).to_complex()
        elif isinstance(coeff, DualScalar):
            c = coeff.to_complex()
        else:
            c = DualScalar.of(coeff).to_complex()
        factor = 1 + 0j
        for loop in key:
            factor *= -np.trace(sl2.eval_word(loop, rho))
        total = total + c * DualScalar(complex(factor), 0j)
    return total


def goldman_bracket(d: Diagram, edge_curves: List[str]) -> SkeinElement:
    """Goldman bracket of a flat two-curve diagram, as the e-part of the
    commutator of the two stackings.

    edge_curves assigns "alpha" or "beta" to each edge of d; at every
    crossing one strand pair must belong to each curve.  The zeroth-order
    part of the commutator is checked to vanish exactly; the returned
    element carries the exact e-parts (QQi coefficients).
    """
    if len(edge_curves) != len(d.edges):
        raise MalformedDiagramError("edge_curves length mismatch")
    curve_of = {}
    for e, curve in zip(d.edges, edge_curves):
        if curve not in ("alpha", "beta"):
            raise MalformedDiagramError(f"bad curve tag {curve!r}")
        curve_of[e.end0] = curve
        curve_of[e.end1] = curve
    alpha_over = []
    beta_over = []
    for c in range(len(d.crossings)):
        pair02 = {curve_of[(c, 0)], curve_of[(c, 2)]}
        pair13 = {curve_of[(c, 1)], curve_of[(c, 3)]}
        if len(pair02) != 1 or len(pair13) != 1 or pair02 == pair13:
            raise MalformedDiagramError(
                f"crossing {c} is not an alpha/beta intersection")
        alpha_over.append("02" if pair02 == {"alpha"} else "13")
        beta_over.append("13" if pair02 == {"alpha"} else "02")
    da = Diagram(d.genus, alpha_over, d.edges, d.free_loops)
    db = Diagram(d.genus, beta_over, d.edges, d.free_loops)
    diff = (resolve(da) - resolve(db)).map_coeffs(eval_dual)
    for key, c in diff.terms.items():
        if c.value:
            raise AssertionError(
                f"stacking commutator has nonzero value part at {key}")
    return diff.map_coeffs(lambda c: c.deriv)


def slide_cuts(w: Word, i: int, k: int):
    """Crossing data for the band sum of the loop w with the meridian of
    handle i at its k-th occurrence (1-based).

    The band point sits just before the letter of occurrence k; the
    crossing of occurrence j sits before the letter for t_i and after it
    for t_i^-1 (the strand meets the meridian disc at the handle entrance
    in the direction of travel).  Returns (occurrences, base position,
    cuts) with cuts[j] the crossing offset of occurrence j measured
    forward from the band point, in 0..len(w).
    """
    occs = occurrences(w, i)
    if not occs:
        raise NoOccurrenceError(f"generator {i} does not occur in {word_str(w)}")
    if not 1 <= k <= len(occs):
        raise NoOccurrenceError(f"occurrence {k} of generator {i} not found")
    n = len(w)
    base = occs[k - 1][0]
    cuts = [(pos - base) % n + (0 if e == 1 else 1) for pos, e in occs]
    return occs, base, cuts


def build_handle_slide(w: Word, i: int, k: int,
                       order: Optional[List[int]] = None
                       ) -> Tuple[Diagram, Diagram]:
    """Diagrams (d_sum, d_plain) of the handle slide [gamma#gamma_i] -
    [gamma] for the loop w, banded at the k-th occurrence (1-based) of
    generator i.

    d_sum has one crossing per occurrence of t_i^±1 (the band attaches
    next to occurrence k without smoothing it away, so its crossing
    persists), the meridian arc passing over (through ports 0 -> 2) at
    each of them; `order` lists the occurrences (1-based) in the order met
    along the meridian.
    """
    occs, base, cuts = slide_cuts(w, i, k)
    m = len(occs)
    n = len(w)
    genus = max(max((g for g, _ in w), default=i), i)
    d_plain = Diagram(genus, [], [], [w])
    k0 = k - 1
    # gamma visits the crossings in occurrence order starting at the band
    seq = [(k0 + s) % m for s in range(m)]
    if order is None:
        order = [j + 1 for j in seq]
    if sorted(order) != list(range(1, m + 1)):
        raise ValueError(f"order must be a permutation of 1..{m}")
    order0 = [j - 1 for j in order]

    def letters(a: int, b: int) -> Word:
        return tuple(w[(base + s) % n] for s in range(a, b))

    def p_in(j):
        return 1 if occs[j][1] == 1 else 3

    def p_out(j):
        return 3 if occs[j][1] == 1 else 1

    edges = []
    # meridian segments between consecutive overpasses
    for r in range(m - 1):
        edges.append(Edge((order0[r], 2), (order0[r + 1], 0), ()))
    # meridian end, through the band point, into the first undercrossing
    edges.append(Edge((order0[-1], 2), (seq[0], p_in(seq[0])),
                      letters(0, cuts[seq[0]])))
    # gamma arcs between consecutive undercrossings
    for s in range(m - 1):
        edges.append(Edge((seq[s], p_out(seq[s])), (seq[s + 1], p_in(seq[s + 1])),
                          letters(cuts[seq[s]], cuts[seq[s + 1]])))
    # last gamma arc, back through the band point, into the meridian start
    edges.append(Edge((seq[-1], p_out(seq[-1])), (order0[0], 0),
                      letters(cuts[seq[-1]], n)))
    d_sum = Diagram(genus, ["02"] * m, edges, [])
    return d_sum, d_plain


def load_diagram(data) -> Diagram:
    """Build a Diagram from the JSON schema {"genus", "crossings",
    "edges", "free_loops"}."""
    if isinstance(data, str):
        data = json.loads(data)
    try:
        genus = int(data.get("genus", 0))
        crossings = [c["over"] for c in data.get("crossings", [])]
        edges = [Edge(tuple(e["from"]), tuple(e["to"]),
                      parse_word(e.get("label", "")))
                 for e in data.get("edges", [])]
        loops = [parse_word(s) for s in data.get("free_loops", [])]
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedDiagramError(f"bad diagram data: {exc}") from exc
    return Diagram(genus, crossings, edges, loops)
