"""Lie-algebra-level self-linking checks: holonomy derivatives and Hessians
against finite differences, the Q-functional identities that close the
scalar Kauffman relations, and the relations themselves."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

import numpy as np
from scipy.linalg import expm

from .words import Word
from . import sl2

FD_STEP = 1e-4


@dataclass(frozen=True)
class DeformedWord:
    """Holonomy family s -> rho(w[:p]) exp(s*xi_p) rho(w[p:]) ... with one
    insertion per slot; slot positions are strictly increasing."""

    word: Word
    slots: Tuple[Tuple[int, np.ndarray], ...]  # (position, tangent)

    def __post_init__(self):
        positions = [p for p, _ in self.slots]
        if positions != sorted(set(positions)):
            raise ValueError("slot positions must be strictly increasing")


def deformed_trace(dw: DeformedWord, rho: sl2.Representation,
                   params: Tuple[float, ...]) -> complex:
    """tr of the holonomy with exp(s_j * xi_j) inserted at each slot."""
    out = np.eye(2, dtype=complex)
    prev = 0
    for (p, xi), s in zip(dw.slots, params):
        out = out @ sl2.eval_word(dw.word[prev:p], rho) @ expm(s * xi)
        prev = p
    out = out @ sl2.eval_word(dw.word[prev:], rho)
    return complex(np.trace(out))


def first_derivative(dw: DeformedWord, rho: sl2.Representation) -> complex:
    """d/ds tr at s=0 for a single slot: tr(xi * A) with A the holonomy of
    the word read from the slot position around the loop."""
    (p, xi), = dw.slots
    a = sl2.eval_word(dw.word[p:] + dw.word[:p], rho)
    return complex(np.trace(xi @ a))


def hessian_pair(dw: DeformedWord, rho: sl2.Representation) -> complex:
    """Mixed partial d^2/ds du tr at 0 for slots p < q: tr(xi A eta B) with
    A the holonomy from p to q and B from q back to p."""
    (p, xi), (q, eta) = dw.slots
    a = sl2.eval_word(dw.word[p:q], rho)
    b = sl2.eval_word(dw.word[q:] + dw.word[:p], rho)
    return complex(np.trace(xi @ a @ eta @ b))


def fd_first_derivative(dw: DeformedWord, rho: sl2.Representation,
                        h: float = FD_STEP) -> complex:
    return (deformed_trace(dw, rho, (h,)) -
            deformed_trace(dw, rho, (-h,))) / (2 * h)


def fd_hessian_pair(dw: DeformedWord, rho: sl2.Representation,
                    h: float = FD_STEP) -> complex:
    return (deformed_trace(dw, rho, (h, h)) - deformed_trace(dw, rho, (h, -h))
            - deformed_trace(dw, rho, (-h, h))
            + deformed_trace(dw, rho, (-h, -h))) / (4 * h * h)


def trace_identity_hessian(alpha: Word, beta: Word, rho: sl2.Representation,
                           slots: Tuple[int, int],
                           xis: Tuple[np.ndarray, np.ndarray]) -> complex:
    """Mixed second derivative of g = tr(ab) + tr(ab^-1) - tr(a) tr(b)
    along insertions at slot p of alpha and slot q of beta; identically
    zero on SL2 x SL2 by the trace identity."""
    p, q = slots
    xi, eta = xis
    la = len(alpha)
    from .words import inverse
    ab = alpha + beta
    abinv = alpha + inverse(beta)
    term1 = hessian_pair(
        DeformedWord(ab, ((p, xi), (la + q, eta))), rho)
    term2 = hessian_pair(
        DeformedWord(abinv, ((p, xi), (la + len(beta) - q, -eta))), rho)
    term3 = (first_derivative(DeformedWord(alpha, ((p, xi),)), rho)
             * first_derivative(DeformedWord(beta, ((q, eta),)), rho))
    return term1 + term2 - term3


def q_case_smooth(a: np.ndarray, b: np.ndarray) -> Tuple[complex, complex]:
    """(Q of phi(xi,eta) = tr(B eta A xi), tr(A)tr(B) + tr(AB^-1)); the two
    agree: the first Kauffman crossing configuration."""
    phi = sl2.form_matrix(lambda xi, eta: np.trace(b @ eta @ a @ xi))
    q = sl2.q_functional(phi)
    direct = complex(np.trace(a) * np.trace(b) + np.trace(a @ sl2.inv2(b)))
    return q, direct


def q_case_split(a: np.ndarray, b: np.ndarray) -> Tuple[complex, complex]:
    """(Q of phi(xi,eta) = tr(A xi) tr(B^-1 eta), tr(AB^-1) - tr(AB)); the
    two agree: the second Kauffman crossing configuration."""
    binv = sl2.inv2(b)
    phi = sl2.form_matrix(lambda xi, eta: np.trace(a @ xi) * np.trace(binv @ eta))
    q = sl2.q_functional(phi)
    direct = complex(np.trace(a @ binv) - np.trace(a @ b))
    return q, direct


def kauffman_scalar_check(a: np.ndarray, b: np.ndarray) -> Tuple[complex, complex]:
    """Residuals of the first-order Kauffman relations in both crossing
    configurations: Q(phi) minus the chi(L_0) - chi(L_infinity) right-hand
    side; both must vanish."""
    q1, rhs1 = q_case_smooth(a, b)
    q2, rhs2 = q_case_split(a, b)
    return q1 - rhs1, q2 - rhs2


def unknot_factor_check(a: np.ndarray) -> complex:
    """chi(L u O) = -2 chi(L): adding a trivial unknot multiplies the
    character by -tr(Id) = -2.  Returns the residual."""
    chi_l = -np.trace(a)
    chi_union = chi_l * (-np.trace(np.eye(2, dtype=complex)))
    return complex(chi_union - (-2) * chi_l)
