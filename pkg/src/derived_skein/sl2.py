"""SL2(C) and sl2(C) numerics: word evaluation, traceless parts, the star
operator, Killing form and Q functional, word-map derivatives in left
trivialization, and divergences of the associated vector fields on
SL2(C)^g."""

from __future__ import annotations

import numpy as np
from scipy.linalg import expm

from .words import Word, max_generator, occurrences

# Standard basis of sl2(C): coordinates (h, e, f) mean h*H + e*E + f*F.
H = np.array([[1, 0], [0, -1]], dtype=complex)
E = np.array([[0, 1], [0, 0]], dtype=complex)
F = np.array([[0, 0], [1, 0]], dtype=complex)
BASIS = (H, E, F)

ID2 = np.eye(2, dtype=complex)

DET_TOL = 1e-10


class Representation:
    """A g-tuple of SL2(C) matrices, the images of the free generators."""

    __slots__ = ("genus", "images")

    def __init__(self, images):
        mats = [np.asarray(m, dtype=complex) for m in images]
        for m in mats:
            d = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
            if abs(d - 1) > DET_TOL:
                raise ValueError(f"matrix has determinant {d}, not 1")
        self.genus = len(mats)
        self.images = tuple(mats)

    def generator(self, i: int) -> np.ndarray:
        if not 1 <= i <= self.genus:
            raise IndexError(f"generator {i} out of range for genus {self.genus}")
        return self.images[i - 1]

    def conjugate(self, c: np.ndarray) -> "Representation":
        cinv = inv2(c)
        return Representation([c @ m @ cinv for m in self.images])


def inv2(m: np.ndarray) -> np.ndarray:
    """Inverse of a 2x2 matrix via the adjugate (exact for det 1)."""
    d = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    return np.array([[m[1, 1], -m[0, 1]], [-m[1, 0], m[0, 0]]], dtype=complex) / d


def eval_word(w: Word, rho: Representation) -> np.ndarray:
    """Substitute generator images: eval(uv) = eval(u) eval(v)."""
    if max_generator(w) > rho.genus:
        raise IndexError(f"word uses generator beyond genus {rho.genus}")
    out = ID2
    for g, e in w:
        m = rho.generator(g)
        out = out @ (m if e == 1 else inv2(m))
    return out


def traceless(a: np.ndarray) -> np.ndarray:
    """A_0 = A - (tr A / 2) Id."""
    return a - (np.trace(a) / 2) * ID2


def sl2_coords(x: np.ndarray) -> np.ndarray:
    """Coordinates (h, e, f) of a traceless 2x2 matrix in the basis H, E, F."""
    return np.array([x[0, 0], x[0, 1], x[1, 0]], dtype=complex)


def sl2_matrix(v) -> np.ndarray:
    h, e, f = v
    return np.array([[h, e], [f, -h]], dtype=complex)


def star(x: np.ndarray) -> np.ndarray:
    """(a b; c d)* = (d -b; -c a); X + X* = tr(X) Id, A* = A^-1 on SL2."""
    return np.array([[x[1, 1], -x[0, 1]], [-x[1, 0], x[0, 0]]], dtype=complex)


def killing(xi, eta) -> complex:
    """Normalized Killing form K(xi, eta) = tr(xi eta) / 6."""
    xi = np.asarray(xi, dtype=complex)
    eta = np.asarray(eta, dtype=complex)
    if xi.shape == (3,):
        xi = sl2_matrix(xi)
    if eta.shape == (3,):
        eta = sl2_matrix(eta)
    return complex(np.trace(xi @ eta)) / 6


#: Matrix of the Killing form in the (H, E, F) basis.
KILLING_MATRIX = np.array([[killing(a, b) for b in BASIS] for a in BASIS])


def q_functional(phi: np.ndarray) -> complex:
    """Q(phi) = phi(H,H) + 2 phi(E,F) + 2 phi(F,E) for a 3x3 form matrix."""
    phi = np.asarray(phi, dtype=complex)
    return complex(phi[0, 0] + 2 * phi[1, 2] + 2 * phi[2, 1])


def project_pi(phi: np.ndarray) -> np.ndarray:
    """pi(phi) = Q(phi) K; idempotent since Q(K) = 1."""
    return q_functional(phi) * KILLING_MATRIX


def form_matrix(phi) -> np.ndarray:
    """3x3 matrix [phi(b_i, b_j)] of a bilinear map on sl2."""
    return np.array([[phi(a, b) for b in BASIS] for a in BASIS], dtype=complex)


def occurrence_endomorphism(w: Word, rho: Representation, i: int,
                            occ: int) -> np.ndarray:
    """3x3 matrix, in the (H,E,F) basis, of the derivative contribution of
    one occurrence of generator i to the word map A_i -> w(...)_0 in left
    trivialization.

    For an occurrence U t_i V the map is xi -> (U xi A_i V)_0; for
    U t_i^-1 V it is xi -> -(U A_i^-1 xi V)_0.
    """
    occs = occurrences(w, i)
    if not 0 <= occ < len(occs):
        raise IndexError(f"occurrence {occ} of generator {i} not found")
    pos, exp = occs[occ]
    u = eval_word(w[:pos], rho)
    v = eval_word(w[pos + 1:], rho)
    ai = rho.generator(i)
    cols = []
    for xi in BASIS:
        if exp == 1:
            img = traceless(u @ xi @ ai @ v)
        else:
            img = -traceless(u @ inv2(ai) @ xi @ v)
        cols.append(sl2_coords(img))
    return np.array(cols, dtype=complex).T


def occurrence_trace_closed_form(w: Word, rho: Representation, i: int,
                                 occ: int, variant: str = "paper") -> complex:
    """Comparison probe for the trace of occurrence_endomorphism.

    variant="paper": (1/2)tr(U A_i V) + tr(U V^-1 A_i^-1) for a positive
    occurrence and -(1/2)tr(U A_i^-1 V) - tr(U A_i^-1 V^-1) for a negative
    one; variant="alt": the same with the letter and V^-1 factors of the
    second term swapped.  Numerical comparison across random samples shows
    the "paper" variant agrees with the 3x3 trace; see the tests.
    """
    pos, exp = occurrences(w, i)[occ]
    u = eval_word(w[:pos], rho)
    v = eval_word(w[pos + 1:], rho)
    a = rho.generator(i) if exp == 1 else inv2(rho.generator(i))
    if variant == "paper":
        second = u @ inv2(v) @ inv2(a) if exp == 1 else u @ a @ inv2(v)
    elif variant == "alt":
        second = u @ a @ inv2(v) if exp == 1 else u @ inv2(v) @ inv2(a)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return complex(np.trace(u @ a @ v) / 2 + np.trace(second)) * exp


def divergence(w: Word, rho: Representation, i: int) -> complex:
    """Trace of the total derivative of A_i -> w(...)_0 in left
    trivialization: the sum of the occurrence endomorphism traces."""
    total = 0j
    for occ in range(len(occurrences(w, i))):
        total += complex(np.trace(occurrence_endomorphism(w, rho, i, occ)))
    return total


def fd_divergence(w: Word, rho: Representation, i: int,
                  h: float = 1e-4) -> complex:
    """Central-difference oracle for divergence: perturb A_i -> exp(s xi) A_i
    along each basis direction and difference the (H,E,F) coordinates of
    w(...)_0."""
    if h <= 0:
        raise ValueError("step must be positive")
    if i > rho.genus:
        return 0j

    def coords_at(mat):
        images = list(rho.images)
        images[i - 1] = mat
        return sl2_coords(traceless(eval_word(w, Representation(images))))

    ai = rho.generator(i)
    total = 0j
    for j, xi in enumerate(BASIS):
        plus = coords_at(expm(h * xi) @ ai)
        minus = coords_at(expm(-h * xi) @ ai)
        total += (plus[j] - minus[j]) / (2 * h)
    return complex(total)


def crossing_contribution(a: np.ndarray, b: np.ndarray, sign: int = 1) -> complex:
    """sign * (tr(AB) + 2 tr(AB^-1)), the difference of the two resolutions
    of a crossing with arc holonomies A and B."""
    val = np.trace(a @ b) + 2 * np.trace(a @ inv2(b))
    return complex(val) * sign


def random_sl2(rng: np.random.Generator, scale: float = 0.4) -> np.ndarray:
    """exp of a random traceless matrix with (h,e,f) coordinates drawn from
    a complex box of half-width `scale`.

    Exponential sampling keeps det = 1 to machine precision and keeps the
    holonomies of moderate-length words numerically tame, which the tight
    residual tolerances of the transport checks rely on.
    """
    v = rng.uniform(-scale, scale, 3) + 1j * rng.uniform(-scale, scale, 3)
    return expm(sl2_matrix(v))


def random_representation(rng: np.random.Generator, genus: int,
                          scale: float = 0.4) -> Representation:
    return Representation([random_sl2(rng, scale) for _ in range(genus)])


def random_word(rng: np.random.Generator, genus: int, length: int) -> Word:
    """Random freely reduced word of exactly the given length (if possible)."""
    letters = []
    for _ in range(length):
        for _ in range(100):
            g = int(rng.integers(1, genus + 1))
            e = int(rng.choice([-1, 1]))
            if letters and letters[-1][0] == g and letters[-1][1] == -e:
                continue
            letters.append((g, e))
            break
    return tuple(letters)
