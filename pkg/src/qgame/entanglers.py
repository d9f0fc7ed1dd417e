"""Referee entanglement operators and named two-qubit states."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import DEFAULT_TOL, commutator, is_unitary, tensor
from .strategies import classical_gate

Y_TENSOR_Y = tensor(classical_gate("Y"), classical_gate("Y"))

_FAMILIES = ("j1", "j2", "identity")


@dataclass(frozen=True)
class EntanglerSpec:
    """Entangler family ("j1", "j2" or "identity") plus angle beta.

    beta runs over [0, pi/2] with beta=pi/2 maximally entangling;
    family="identity" ignores beta.
    """

    family: str
    beta: float = 0.0

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise ValueError(f"unknown entangler family {self.family!r}")
        if not (0.0 <= self.beta <= math.pi / 2 + 1e-12):
            raise ValueError(f"beta out of range [0, pi/2]: {self.beta}")


def build_entangler(spec: EntanglerSpec) -> np.ndarray:
    """The 4x4 entanglement operator for a family and angle.

    J1(beta) = cos(beta/2) I + i sin(beta/2) (Y x Y) = exp(i (beta/2) Y x Y);
    J1(0) is the identity and J1(pi/2)|00> = (|00> + i|11>)/sqrt(2).
    J2(beta) is the orthogonal matrix with J2(pi/2)|00> = (|01> + |10>)/sqrt(2),
    the triplet state.
    """
    c = math.cos(spec.beta / 2.0)
    s = math.sin(spec.beta / 2.0)
    if spec.family == "identity":
        return np.eye(4, dtype=complex)
    if spec.family == "j1":
        return c * np.eye(4, dtype=complex) + 1j * s * Y_TENSOR_Y
    return np.array(
        [
            [0, c, 0, -s],
            [c, 0, -s, 0],
            [s, 0, c, 0],
            [0, s, 0, c],
        ],
        dtype=complex,
    )


def bell_state(which: str) -> np.ndarray:
    """One of the four maximally entangled Bell states as a 4-vector.

    psi_plus/psi_minus = (|00> +/- i|11>)/sqrt(2); T = (|01> + |10>)/sqrt(2);
    S = (|01> - |10>)/sqrt(2).
    """
    r = 1.0 / math.sqrt(2.0)
    states = {
        "psi_plus": [r, 0, 0, 1j * r],
        "psi_minus": [r, 0, 0, -1j * r],
        "T": [0, r, r, 0],
        "S": [0, r, -r, 0],
    }
    if which not in states:
        raise ValueError(f"unknown Bell state {which!r}")
    return np.array(states[which], dtype=complex)


def partial_state(family: str, gamma: float) -> np.ndarray:
    """Partially entangled interpolation toward psi_plus or T.

    For family "psi_plus": cos(gamma/2)|00> + i sin(gamma/2)|11>, which is
    |00> at gamma=0 and the psi_plus Bell state at gamma=pi/2. The phase i
    on |11> makes the gamma=pi/2 endpoint equal psi_plus exactly; amplitude
    magnitudes are (cos(gamma/2), 0, 0, sin(gamma/2)) either way.
    For family "T": cos(gamma/2)|01> + sin(gamma/2)|10>, giving |01> at 0,
    the triplet at pi/2 and |10> at pi.
    """
    if not (0.0 <= gamma <= math.pi):
        raise ValueError(f"gamma out of range [0, pi]: {gamma}")
    c = math.cos(gamma / 2.0)
    s = math.sin(gamma / 2.0)
    if family == "psi_plus":
        return np.array([c, 0, 0, 1j * s], dtype=complex)
    if family == "T":
        return np.array([0, c, s, 0], dtype=complex)
    raise ValueError(f"unknown partial state family {family!r}")


def is_classically_commensurate(j: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    """True iff J commutes with Y x Y, i.e. [Y x Y, J] vanishes within tol.

    This is the condition under which the pair of classical gates {I, Y}
    played inside the quantum protocol reproduces the classical game
    outcomes. Non-unitary J is rejected.
    """
    j = np.asarray(j, dtype=complex)
    if not is_unitary(j, max(tol, DEFAULT_TOL)):
        raise ValueError("entangler must be unitary")
    return bool(np.abs(commutator(Y_TENSOR_Y, j)).max() <= tol)


def is_product_state(s: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    """True iff the two-qubit state a|00>+b|01>+c|10>+d|11> is unentangled.

    The state is a tensor product of two single qubits exactly when the 2x2
    coefficient matrix [[a, b], [c, d]] has rank 1, i.e. |ad - bc| <= tol.
    """
    s = np.asarray(s, dtype=complex).reshape(4)
    a, b, c, d = s
    return bool(abs(a * d - b * c) <= tol)
