"""Qutrit strategies, the two-qutrit entangler and the impossibility check.

Classical trit gates are the six 3x3 permutation matrices (the group S3).
The two-qutrit entangler J(beta) = exp(i beta Z) is built from
Z = X + X^T with X the tensor square of the three-cycle; its closed-form
coefficients follow from Z^2 = Z + 2I. The Schur-lemma check shows no
nontrivial entangler can commute with all classical gates: the commutant
of {S12, S13} is scalar.
"""

from __future__ import annotations

import cmath
import math

import numpy as np
from scipy.optimize import brentq

from .linalg import tensor

_PERMS = {
    "I3": [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
    "S12": [[0, 1, 0], [1, 0, 0], [0, 0, 1]],
    "S13": [[0, 0, 1], [0, 1, 0], [1, 0, 0]],
    "S23": [[1, 0, 0], [0, 0, 1], [0, 1, 0]],
    # C123 cycles |0> -> |1> -> |2> -> |0>; C132 is its inverse.
    "C123": [[0, 0, 1], [1, 0, 0], [0, 1, 0]],
    "C132": [[0, 1, 0], [0, 0, 1], [1, 0, 0]],
}


def perm_matrix(which: str) -> np.ndarray:
    """One of the six 3x3 permutation matrices (trit gates)."""
    if which not in _PERMS:
        raise ValueError(f"unknown permutation {which!r}")
    return np.array(_PERMS[which], dtype=complex)


def build_Z() -> np.ndarray:
    """The 9x9 symmetric generator Z = X + X^T with X = C x C.

    C is the three-cycle sending |0> -> |1> -> |2> -> |0>, so
    Z|00> = |11> + |22> and Z satisfies Z^2 = Z + 2I exactly.
    """
    c = perm_matrix("C123")
    x = tensor(c, c)
    return x + x.T


def _entangler_coeffs(beta: float) -> tuple[complex, complex]:
    """Coefficients (a, b) with exp(i beta Z) = a I + b Z.

    Z has eigenvalues 2 and -1 (from Z^2 = Z + 2I), so matching the
    exponential on both eigenspaces gives
    a = exp(-i beta) (exp(3 i beta) + 2) / 3 and
    b = exp(-i beta) (exp(3 i beta) - 1) / 3.
    """
    e3 = cmath.exp(3j * beta)
    em = cmath.exp(-1j * beta)
    return em * (e3 + 2.0) / 3.0, em * (e3 - 1.0) / 3.0


def qutrit_entangler(beta: float) -> np.ndarray:
    """The two-qutrit entangler J(beta) = exp(i beta Z), unitary for all beta."""
    a, b = _entangler_coeffs(beta)
    return a * np.eye(9, dtype=complex) + b * build_Z()


def entangled_initial_state(beta: float) -> np.ndarray:
    """J(beta)|00> = a|00> + b|11> + b|22>."""
    a, b = _entangler_coeffs(beta)
    out = np.zeros(9, dtype=complex)
    out[0] = a
    out[4] = b
    out[8] = b
    return out


def max_entangling_beta() -> float:
    """The smallest beta > 0 at which J(beta)|00> is maximally entangled.

    Solves |exp(3 i beta) + 2| = |exp(3 i beta) - 1| (equal amplitude
    magnitudes) on (0, pi/3); the root is 2*pi/9 where all three nonzero
    amplitudes have magnitude 1/sqrt(3).
    """

    def gap(beta):
        e3 = cmath.exp(3j * beta)
        return abs(e3 + 2.0) - abs(e3 - 1.0)

    return brentq(gap, 1e-9, math.pi / 3.0 - 1e-9, xtol=1e-15)


def commutant_is_scalar(generators, dim: int) -> tuple[bool, int]:
    """Dimension of the joint commutant {A : [A, G] = 0 for all G}.

    Solves the stacked linear system over the dim^2 matrix entries and
    returns (scalar_only, dimension) where scalar_only is true iff the
    solution space is exactly the span of the identity. A one-dimensional
    commutant is the executable content of Schur's lemma for an
    irreducible set of generators.
    """
    eye = np.eye(dim)
    rows = []
    for g in generators:
        g = np.asarray(g, dtype=complex)
        if g.shape != (dim, dim):
            raise ValueError(f"generator shape {g.shape} does not match dim {dim}")
        # row-major vec: vec([A, G]) = (I kron G^T - G kron I) vec(A)
        rows.append(np.kron(eye, g.T) - np.kron(g, eye))
    system = np.vstack(rows)
    _, sv, vh = np.linalg.svd(system)
    null_mask = np.concatenate([sv, np.zeros(dim * dim - len(sv))]) < 1e-10
    dimension = int(null_mask.sum())
    if dimension != 1:
        return False, dimension
    basis = vh[-1].reshape(dim, dim)
    # scalar commutant iff the single null vector is proportional to I
    scale = np.trace(basis) / dim
    scalar_only = bool(np.abs(basis - scale * eye).max() < 1e-10)
    return scalar_only, dimension


def qutrit_tensor(q1: np.ndarray, q2: np.ndarray) -> np.ndarray:
    """Tensor product of two single-qutrit states (row-major |ij> layout)."""
    q1 = np.asarray(q1, dtype=complex).reshape(3)
    q2 = np.asarray(q2, dtype=complex).reshape(3)
    return np.kron(q1, q2)


def is_qutrit_product(state: np.ndarray, tol: float = 1e-12) -> bool:
    """True iff a two-qutrit state factors into two single-qutrit states.

    The 3x3 coefficient matrix must have rank 1, i.e. all 2x2 minors
    vanish within tol.
    """
    m = np.asarray(state, dtype=complex).reshape(3, 3)
    for r1 in range(3):
        for r2 in range(r1 + 1, 3):
            for c1 in range(3):
                for c2 in range(c1 + 1, 3):
                    minor = m[r1, c1] * m[r2, c2] - m[r1, c2] * m[r2, c1]
                    if abs(minor) > tol:
                        return False
    return True
