"""Small dense complex matrix helpers and fixed matrix constants.

Everything here operates on plain numpy arrays (complex128). Matrices are
tiny (at most 9x9), so there is no attempt at sparse storage or performance
tuning; clarity and exactness of the structural predicates are what matter.
"""

from __future__ import annotations

import numpy as np

DEFAULT_TOL = 1e-12


class StructureError(ValueError):
    """A matrix does not have the algebraic structure an operation requires."""


# Pauli matrices sigma_1, sigma_2, sigma_3.
SIGMA_1 = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_3 = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI = (SIGMA_1, SIGMA_2, SIGMA_3)

# Gell-Mann matrices lambda_1 .. lambda_8 (generators of SU(3)).
GELL_MANN = tuple(
    np.array(m, dtype=complex)
    for m in [
        [[0, 1, 0], [1, 0, 0], [0, 0, 0]],
        [[0, -1j, 0], [1j, 0, 0], [0, 0, 0]],
        [[1, 0, 0], [0, -1, 0], [0, 0, 0]],
        [[0, 0, 1], [0, 0, 0], [1, 0, 0]],
        [[0, 0, -1j], [0, 0, 0], [1j, 0, 0]],
        [[0, 0, 0], [0, 0, 1], [0, 1, 0]],
        [[0, 0, 0], [0, 0, -1j], [0, 1j, 0]],
        [[1 / np.sqrt(3), 0, 0], [0, 1 / np.sqrt(3), 0], [0, 0, -2 / np.sqrt(3)]],
    ]
)


def tensor(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Tensor (Kronecker) product of two matrices or column vectors."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def dagger(m: np.ndarray) -> np.ndarray:
    """Hermitian adjoint (conjugate transpose)."""
    return np.asarray(m, dtype=complex).conj().T


def is_unitary(m: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    """True iff M M^dag and M^dag M deviate from the identity by at most tol.

    Deviation is measured entrywise (max absolute difference). Non-square
    input is rejected.
    """
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"is_unitary requires a square matrix, got shape {m.shape}")
    if tol <= 0:
        raise ValueError("tol must be positive")
    eye = np.eye(m.shape[0])
    return (
        np.abs(m @ dagger(m) - eye).max() <= tol
        and np.abs(dagger(m) @ m - eye).max() <= tol
    )


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """[A, B] = AB - BA for square matrices of equal dimension."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape or a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"commutator needs equal square shapes, got {a.shape} and {b.shape}")
    return a @ b - b @ a


def expm_structured(a: np.ndarray, x: complex, kind: str) -> np.ndarray:
    """exp(x*A) for matrices with special algebraic structure.

    kind="involution"  requires A^2 = I:   exp(xA) = cosh(x) I + sinh(x) A
    kind="cubic"       requires A^3 = A:   exp(xA) = I + sinh(x) A + (cosh(x)-1) A^2
    kind="diagonal"    requires A diagonal: elementwise exponential

    Structural violations raise StructureError; shape problems raise ValueError.
    """
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expm_structured requires a square matrix, got shape {a.shape}")
    n = a.shape[0]
    eye = np.eye(n)
    if kind == "involution":
        if np.abs(a @ a - eye).max() > DEFAULT_TOL:
            raise StructureError("matrix is not an involution (A^2 != I)")
        return np.cosh(x) * eye + np.sinh(x) * a
    if kind == "cubic":
        a2 = a @ a
        if np.abs(a2 @ a - a).max() > DEFAULT_TOL:
            raise StructureError("matrix does not satisfy A^3 = A")
        return eye + np.sinh(x) * a + (np.cosh(x) - 1) * a2
    if kind == "diagonal":
        if np.abs(a - np.diag(np.diag(a))).max() > DEFAULT_TOL:
            raise StructureError("matrix has nonzero off-diagonal entries")
        return np.diag(np.exp(x * np.diag(a)))
    raise ValueError(f"unknown kind {kind!r}")
