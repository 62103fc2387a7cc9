"""The quantum torus Z[t^±1]<L^±1, M^±1>/(LM - t^2 ML): normal forms, the
involution sigma, the action on sequences, and the sigma0/sigma1 symbol
calculus with its Poisson-bracket product rule.

Normal form: every element is a sum c_{a,b}(t) * L^a M^b (L written first).
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, Tuple

from .rings import (LaurentPoly, QQi, QQI_I, QQI_ZERO, DualScalar, eval_dual,
                    format_laurent, parse_laurent)

Mono = Tuple[int, int]


class WindowTooSmallError(ValueError):
    """The L-degree span of the operator leaves the sequence window."""


#: Constant c in sigma1(PQ) = sigma0(P) sigma1(Q) + sigma1(P) sigma0(Q)
#: + c * {sigma0(P), sigma0(Q)}.  Calibrated once from the commutator of
#: L and M under the t -> -1+e reduction and frozen; see the test suite.
SYMBOL_PRODUCT_CONSTANT = QQi(Fraction(0), Fraction(1, 2))


class TorusElement:
    """Element of the quantum torus in normal form {(a,b): LaurentPoly}."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[Mono, LaurentPoly] = None):
        t = {}
        if terms:
            for ab, c in terms.items():
                c = LaurentPoly.of(c)
                if c:
                    t[ab] = c
        self.terms = t

    @staticmethod
    def monomial(a: int, b: int, coeff=1) -> "TorusElement":
        return TorusElement({(a, b): LaurentPoly.of(coeff)})

    @staticmethod
    def zero() -> "TorusElement":
        return TorusElement()

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, TorusElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "TorusElement") -> "TorusElement":
        t = dict(self.terms)
        for ab, c in other.terms.items():
            s = t.get(ab, LaurentPoly.zero()) + c
            if s:
                t[ab] = s
            else:
                t.pop(ab, None)
        return TorusElement(t)

    def __neg__(self) -> "TorusElement":
        return TorusElement({ab: -c for ab, c in self.terms.items()})

    def __sub__(self, other: "TorusElement") -> "TorusElement":
        return self + (-other)

    def __mul__(self, other: "TorusElement") -> "TorusElement":
        return multiply(self, other)

    def __repr__(self):
        return f"TorusElement({torus_str(self)})"


def multiply(p: TorusElement, q: TorusElement) -> TorusElement:
    """Normal-form product: (L^a M^b)(L^c M^d) = t^(-2bc) L^(a+c) M^(b+d)."""
    out: Dict[Mono, LaurentPoly] = {}
    for (a, b), cp in p.terms.items():
        for (c, d), cq in q.terms.items():
            coeff = cp * cq * LaurentPoly.t_power(-2 * b * c)
            key = (a + c, b + d)
            s = out.get(key, LaurentPoly.zero()) + coeff
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return TorusElement(out)


def sigma(p: TorusElement) -> TorusElement:
    """Involution sigma(L^a M^b) = L^-a M^-b, coefficients preserved."""
    return TorusElement({(-a, -b): c for (a, b), c in p.terms.items()})


class CommutativeLM:
    """Element of the commutative Laurent ring C[L^±1, M^±1] with exact
    Gaussian-rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[Mono, QQi] = None):
        t = {}
        if terms:
            for ab, c in terms.items():
                c = QQi.of(c)
                if c:
                    t[ab] = c
        self.terms = t

    @staticmethod
    def monomial(a: int, b: int, coeff=1) -> "CommutativeLM":
        return CommutativeLM({(a, b): QQi.of(coeff)})

    @staticmethod
    def zero() -> "CommutativeLM":
        return CommutativeLM()

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, CommutativeLM) and self.terms == other.terms

    def __add__(self, other: "CommutativeLM") -> "CommutativeLM":
        t = dict(self.terms)
        for ab, c in other.terms.items():
            s = t.get(ab, QQI_ZERO) + c
            if s:
                t[ab] = s
            else:
                t.pop(ab, None)
        return CommutativeLM(t)

    def __neg__(self):
        return CommutativeLM({ab: -c for ab, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other) -> "CommutativeLM":
        if isinstance(other, QQi):
            return CommutativeLM({ab: c * other for ab, c in self.terms.items()})
        out: Dict[Mono, QQi] = {}
        for (a, b), cp in self.terms.items():
            for (c, d), cq in other.terms.items():
                key = (a + c, b + d)
                s = out.get(key, QQI_ZERO) + cp * cq
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return CommutativeLM(out)

    __rmul__ = __mul__

    def __repr__(self):
        return f"CommutativeLM({self.terms})"


def symbol0(p: TorusElement) -> CommutativeLM:
    """Evaluate coefficients at t = -1, forgetting noncommutativity."""
    out = CommutativeLM.zero()
    for ab, c in p.terms.items():
        out = out + CommutativeLM.monomial(*ab, eval_dual(c).value)
    return out


def symbol1(p: TorusElement) -> CommutativeLM:
    """First-order symbol: i times the e-part of the t -> -1+e reduction,
    taken in the symmetric (Weyl) monomial ordering.

    On a normal-form term c(t) L^a M^b this is i*(c_e - c(-1)*a*b) L^a M^b
    where eval_dual(c) = c(-1) + e*c_e.  The -a*b correction converts from
    the L-first normal ordering to the symmetric ordering; with it the
    product rule holds with the single constant SYMBOL_PRODUCT_CONSTANT.
    In particular sigma1(L) = sigma1(M) = 0.
    """
    out = CommutativeLM.zero()
    for (a, b), c in p.terms.items():
        d = eval_dual(c)
        coeff = QQI_I * (d.deriv - d.value * QQi.of(a * b))
        out = out + CommutativeLM.monomial(a, b, coeff)
    return out


def poisson_bracket(f: CommutativeLM, g: CommutativeLM) -> CommutativeLM:
    """Goldman bracket on monomials: {L^a M^b, L^c M^d} =
    2(bc - ad) L^(a+c) M^(b+d).

    This is the unique bracket for which the commutator in the quantum
    torus reduces to e*{f, g} under t -> -1 + e.
    """
    out = CommutativeLM.zero()
    for (a, b), cf in f.terms.items():
        for (c, d), cg in g.terms.items():
            k = QQi.of(2 * (b * c - a * d))
            out = out + CommutativeLM.monomial(a + c, b + d, cf * cg * k)
    return out


def dual_image(p: TorusElement) -> Dict[Mono, DualScalar]:
    """Coefficient-wise t -> -1+e image, keyed by monomial."""
    return {ab: eval_dual(c) for ab, c in p.terms.items()}


class RSequence:
    """Finite window of a sequence Z -> Z[t^±1]: values[j] is f_{base+j}."""

    __slots__ = ("base", "values")

    def __init__(self, base: int, values):
        self.base = base
        self.values = [LaurentPoly.of(v) for v in values]

    def __getitem__(self, n: int) -> LaurentPoly:
        j = n - self.base
        if not 0 <= j < len(self.values):
            raise WindowTooSmallError(f"index {n} outside window")
        return self.values[j]

    @property
    def window(self):
        return range(self.base, self.base + len(self.values))

    def __eq__(self, other):
        return (self.base == other.base and self.values == other.values)

    def __repr__(self):
        return f"RSequence({self.base}, {self.values})"


def act(p: TorusElement, f: RSequence) -> RSequence:
    """Module action (Lf)_n = f_{n+1}, (Mf)_n = t^{2n} f_n.

    A term c(t) L^a M^b sends f_n to c(t) t^{2(n+a)b} f_{n+a}; the result
    window is shrunk to the indices where every shift stays in f's window.
    """
    if not p.terms:
        return RSequence(f.base, [LaurentPoly.zero()] * len(f.values))
    amin = min(a for a, _ in p.terms)
    amax = max(a for a, _ in p.terms)
    lo = f.base - amin
    hi = f.base + len(f.values) - 1 - amax
    if lo > hi:
        raise WindowTooSmallError(
            f"window {f.window} too small for L-degrees [{amin},{amax}]")
    values = []
    for n in range(lo, hi + 1):
        v = LaurentPoly.zero()
        for (a, b), c in p.terms.items():
            v = v + c * LaurentPoly.t_power(2 * (n + a) * b) * f[n + a]
        values.append(v)
    return RSequence(lo, values)


_MONO_RE = re.compile(r"^(?P<var>[LM])(?:\^(?P<exp>-?\d+))?$")


def parse_torus(s: str) -> TorusElement:
    """Parse "+"/"-"-joined terms like "t^2*L^1*M^-3"."""
    s = s.strip().replace("- ", "-").replace("+ ", "+")
    out = TorusElement.zero()
    for tok in s.split():
        neg = tok.startswith("-")
        tok = tok.lstrip("+-")
        coeff = LaurentPoly.one()
        a = b = 0
        for factor in tok.split("*"):
            m = _MONO_RE.match(factor)
            if m:
                e = int(m.group("exp")) if m.group("exp") else 1
                if m.group("var") == "L":
                    a += e
                else:
                    b += e
            else:
                coeff = coeff * parse_laurent(factor)
        if neg:
            coeff = -coeff
        out = out + TorusElement({(a, b): coeff})
    return out


def torus_str(p: TorusElement) -> str:
    if not p.terms:
        return "0"
    parts = []
    for (a, b) in sorted(p.terms):
        c = p.terms[(a, b)]
        factors = []
        cs = format_laurent(c)
        if len(c.coeffs) > 1:
            cs = f"({cs})"
        if cs != "1" or (a == 0 and b == 0):
            factors.append(cs)
        if a:
            factors.append(f"L^{a}")
        if b:
            factors.append(f"M^{b}")
        parts.append("*".join(factors))
    return " + ".join(parts)
