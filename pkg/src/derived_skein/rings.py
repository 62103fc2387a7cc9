"""Exact coefficient arithmetic: Gaussian rationals, Laurent polynomials in t,
dual numbers, and the reduction t -> -1 + e (e^2 = 0)."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rat = Union[int, Fraction]


@dataclass(frozen=True)
class QQi:
    """Gaussian rational re + im*i with exact Fraction parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    @staticmethod
    def of(x) -> "QQi":
        if isinstance(x, QQi):
            return x
        if isinstance(x, complex):
            return QQi(Fraction(x.real), Fraction(x.imag))
        return QQi(Fraction(x))

    @staticmethod
    def _coerce(x):
        try:
            return QQi.of(x)
        except TypeError:
            return None

    def __add__(self, other) -> "QQi":
        o = QQi._coerce(other)
        if o is None:
            return NotImplemented
        return QQi(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other) -> "QQi":
        o = QQi._coerce(other)
        if o is None:
            return NotImplemented
        return QQi(self.re - o.re, self.im - o.im)

    def __rsub__(self, other) -> "QQi":
        return QQi.of(other) - self

    def __neg__(self) -> "QQi":
        return QQi(-self.re, -self.im)

    def __mul__(self, other) -> "QQi":
        o = QQi._coerce(other)
        if o is None:
            return NotImplemented
        return QQi(self.re * o.re - self.im * o.im,
                   self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "QQi":
        o = QQi.of(other)
        n = o.re * o.re + o.im * o.im
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return QQi((self.re * o.re + self.im * o.im) / n,
                   (self.im * o.re - self.re * o.im) / n)

    def __rtruediv__(self, other) -> "QQi":
        return QQi.of(other) / self

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other) -> bool:
        o = QQi.of(other)
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __repr__(self) -> str:
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}*i"
        sign = "+" if self.im > 0 else "-"
        return f"({self.re}{sign}{abs(self.im)}*i)"


QQI_ZERO = QQi()
QQI_ONE = QQi(Fraction(1))
QQI_I = QQi(Fraction(0), Fraction(1))


class LaurentPoly:
    """Exact Laurent polynomial in t with QQi coefficients.

    Coefficients are stored as a map exponent -> nonzero QQi.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for n, v in coeffs.items():
                v = QQi.of(v)
                if v:
                    c[n] = v
        self.coeffs = c

    @staticmethod
    def of(x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        return LaurentPoly({0: QQi.of(x)})

    @staticmethod
    def t_power(n: int, coeff=1) -> "LaurentPoly":
        return LaurentPoly({n: QQi.of(coeff)})

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly({0: QQI_ONE})

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return self.coeffs == LaurentPoly.of(other).coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other) -> "LaurentPoly":
        o = LaurentPoly.of(other)
        c = dict(self.coeffs)
        for n, v in o.coeffs.items():
            s = c.get(n, QQI_ZERO) + v
            if s:
                c[n] = s
            else:
                c.pop(n, None)
        return LaurentPoly(c)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({n: -v for n, v in self.coeffs.items()})

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-LaurentPoly.of(other))

    def __rsub__(self, other) -> "LaurentPoly":
        return LaurentPoly.of(other) - self

    def __mul__(self, other) -> "LaurentPoly":
        o = LaurentPoly.of(other)
        c = {}
        for n, v in self.coeffs.items():
            for m, w in o.coeffs.items():
                s = c.get(n + m, QQI_ZERO) + v * w
                if s:
                    c[n + m] = s
                else:
                    c.pop(n + m, None)
        return LaurentPoly(c)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise ValueError("negative powers of a general Laurent polynomial")
        r = LaurentPoly.one()
        for _ in range(k):
            r = r * self
        return r

    @property
    def min_degree(self) -> int:
        return min(self.coeffs) if self.coeffs else 0

    @property
    def max_degree(self) -> int:
        return max(self.coeffs) if self.coeffs else 0

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        return format_laurent(self)


def _format_coeff(v: QQi) -> str:
    if not v.im:
        return str(v.re)
    if not v.re:
        if v.im == 1:
            return "i"
        if v.im == -1:
            return "-i"
        return f"{v.im}*i"
    sign = "+" if v.im > 0 else "-"
    return f"({v.re}{sign}{abs(v.im)}*i)"


def format_laurent(p: LaurentPoly) -> str:
    """Render as "c_k*t^k +- ..." with descending exponents, e.g. "-t^3 + 2*t^-1"."""
    if not p.coeffs:
        return "0"
    parts = []
    for n in sorted(p.coeffs, reverse=True):
        c = _format_coeff(p.coeffs[n])
        if n == 0:
            term = c
        else:
            tpow = "t" if n == 1 else f"t^{n}"
            if c == "1":
                term = tpow
            elif c == "-1":
                term = f"-{tpow}"
            else:
                term = f"{c}*{tpow}"
        parts.append(term)
    out = parts[0]
    for term in parts[1:]:
        if term.startswith("-"):
            out += f" - {term[1:]}"
        else:
            out += f" + {term}"
    return out


_TERM_RE = re.compile(
    r"^(?P<coeff>[+-]?\d+(?:/\d+)?|[+-]?i|[+-])?"
    r"(?P<star>\*)?"
    r"(?P<t>t(?:\^(?P<exp>-?\d+))?)?$"
)


def parse_laurent(s: str) -> LaurentPoly:
    """Parse the textual form produced by format_laurent."""
    s = s.strip()
    if s in ("", "0"):
        return LaurentPoly.zero()
    # normalize "a - b" into "+a" "-b" chunks
    s = s.replace("- ", "-").replace("+ ", "+")
    result = LaurentPoly.zero()
    for tok in s.split():
        m = _TERM_RE.match(tok)
        if not m or (m.group("coeff") is None and m.group("t") is None):
            raise ValueError(f"cannot parse Laurent term {tok!r}")
        cs = m.group("coeff")
        if cs in (None, "+"):
            coeff = QQI_ONE
        elif cs == "-":
            coeff = -QQI_ONE
        elif cs.endswith("i"):
            coeff = QQI_I if not cs.startswith("-") else -QQI_I
        else:
            coeff = QQi(Fraction(cs))
        if m.group("t"):
            exp = int(m.group("exp")) if m.group("exp") else 1
        else:
            exp = 0
        result = result + LaurentPoly.t_power(exp, coeff)
    return result


class DualScalar:
    """Dual number value + deriv*e with e^2 = 0.

    Parts may be exact QQi or floating complex; mixed arithmetic coerces
    to complex.
    """

    __slots__ = ("value", "deriv")

    def __init__(self, value, deriv=0):
        if isinstance(value, QQi) != isinstance(deriv, QQi):
            value = complex(value)
            deriv = complex(deriv)
        self.value = value
        self.deriv = deriv

    @staticmethod
    def of(x) -> "DualScalar":
        if isinstance(x, DualScalar):
            return x
        if isinstance(x, QQi):
            return DualScalar(x, QQI_ZERO)
        return DualScalar(complex(x), 0j)

    def to_complex(self) -> "DualScalar":
        return DualScalar(complex(self.value), complex(self.deriv))

    def _coerce(self, other):
        o = DualScalar.of(other)
        if isinstance(self.value, QQi) != isinstance(o.value, QQi):
            return self.to_complex(), o.to_complex()
        return self, o

    def __add__(self, other) -> "DualScalar":
        a, b = self._coerce(other)
        return DualScalar(a.value + b.value, a.deriv + b.deriv)

    __radd__ = __add__

    def __neg__(self) -> "DualScalar":
        return DualScalar(-self.value, -self.deriv)

    def __sub__(self, other) -> "DualScalar":
        a, b = self._coerce(other)
        return DualScalar(a.value - b.value, a.deriv - b.deriv)

    def __rsub__(self, other) -> "DualScalar":
        return DualScalar.of(other) - self

    def __mul__(self, other) -> "DualScalar":
        a, b = self._coerce(other)
        return DualScalar(a.value * b.value,
                          a.value * b.deriv + a.deriv * b.value)

    __rmul__ = __mul__

    def inverse(self) -> "DualScalar":
        if not self.value:
            raise ZeroDivisionError("dual scalar with zero value part")
        inv = 1 / self.value if not isinstance(self.value, QQi) \
            else QQI_ONE / self.value
        return DualScalar(inv, -self.deriv * inv * inv)

    def __truediv__(self, other) -> "DualScalar":
        return self * DualScalar.of(other).inverse()

    def __eq__(self, other) -> bool:
        a, b = self._coerce(other)
        return a.value == b.value and a.deriv == b.deriv

    def __hash__(self):
        return hash((str(self.value), str(self.deriv)))

    def __str__(self) -> str:
        v, d = complex(self.value), complex(self.deriv)
        return f"({v.real:g},{v.imag:g})+({d.real:g},{d.imag:g})e"

    def __repr__(self) -> str:
        return f"DualScalar({self.value!r}, {self.deriv!r})"


def dual_mul(x: DualScalar, y: DualScalar) -> DualScalar:
    """Product in C[e]/(e^2)."""
    return DualScalar.of(x) * DualScalar.of(y)


def eval_dual(p: LaurentPoly) -> DualScalar:
    """Ring homomorphism t -> -1 + e; t^n maps to (-1)^n (1 - n*e), exactly."""
    value = QQI_ZERO
    deriv = QQI_ZERO
    for n, c in p.coeffs.items():
        sign = QQI_ONE if n % 2 == 0 else -QQI_ONE
        value = value + c * sign
        deriv = deriv + c * sign * QQi.of(-n)
    return DualScalar(value, deriv)
