"""Symbol calculus on the quantum torus: the commutator collapses to the
Poisson bracket under t -> -1 + e, the first-order symbol satisfies a
product rule with a single constant, and recurrence operators annihilate
their solution sequences exactly.

Run:  python3 demos/quantum_torus_symbols.py
"""

from derived_skein import quantum_torus as qt
from derived_skein.rings import LaurentPoly

L = qt.TorusElement.monomial(1, 0)
M = qt.TorusElement.monomial(0, 1)

# LM = t^2 ML: the defining relation in normal form.
print("LM:", qt.torus_str(L * M))
print("ML:", qt.torus_str(M * L))

# The e-part of a commutator is the Goldman-type Poisson bracket of the
# symbols: {L^a M^b, L^c M^d} = 2(bc - ad) L^(a+c) M^(b+d).
p = qt.TorusElement.monomial(1, 2)
q = qt.TorusElement.monomial(3, -1)
comm = qt.dual_image(p * q - q * p)
print("commutator e-part:", {ab: str(c.deriv) for ab, c in comm.items()})
print("poisson bracket:  ",
      {ab: str(c) for ab, c in
       qt.poisson_bracket(qt.symbol0(p), qt.symbol0(q)).terms.items()})

# The first-order symbol obeys a twisted product rule; the constant is
# calibrated once and frozen.
lhs = qt.symbol1(p * q)
rhs = (qt.symbol0(p) * qt.symbol1(q) + qt.symbol1(p) * qt.symbol0(q)
       + qt.SYMBOL_PRODUCT_CONSTANT
       * qt.poisson_bracket(qt.symbol0(p), qt.symbol0(q)))
print("product rule holds:", lhs == rhs,
      "with constant", qt.SYMBOL_PRODUCT_CONSTANT)

# Recurrence operators annihilate their solutions on any finite window:
# (L - 1) kills constants and (L - t^2 M) kills n -> t^(n(n+1)).
const = qt.RSequence(-5, [LaurentPoly.one()] * 10)
print("(L-1) on constants is zero:",
      all(not v for v in qt.act(L - qt.TorusElement.monomial(0, 0),
                                const).values))
quad = qt.RSequence(-5, [LaurentPoly.t_power(n * (n + 1))
                         for n in range(-5, 5)])
op = L - qt.TorusElement.monomial(0, 1, LaurentPoly.t_power(2))
print("(L - t^2 M) on t^(n(n+1)) is zero:",
      all(not v for v in qt.act(op, quad).values))
