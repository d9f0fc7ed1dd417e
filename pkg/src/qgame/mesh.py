"""Discretization of the strategy space into a finite indexed mesh.

theta takes n_theta equally spaced values on [0, pi]; phi and alpha take
n_phi and n_alpha equally spaced values on [0, 2*pi] including both
endpoints. The poles theta=0 and theta=pi each carry the single strategy
(0, 0, theta), so the mesh has (n_theta-2)*n_phi*n_alpha + 2 strategies.

Strategies are numbered 1..N_S in lexicographic order: index 1 is the
theta=0 pole, index N_S the theta=pi pole, and interior indices run with
theta slowest, then phi, then alpha fastest, all ascending.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .strategies import StrategyAngles

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class MeshSpec:
    n_theta: int
    n_phi: int
    n_alpha: int

    def __post_init__(self):
        if self.n_theta < 3:
            raise ValueError("n_theta must be at least 3")
        if self.n_phi < 1 or self.n_alpha < 1:
            raise ValueError("n_phi and n_alpha must be at least 1")

    @property
    def n_strategies(self) -> int:
        return (self.n_theta - 2) * self.n_phi * self.n_alpha + 2

    def theta_value(self, k: int) -> float:
        return math.pi * k / (self.n_theta - 1)

    def phi_value(self, k: int) -> float:
        return 0.0 if self.n_phi == 1 else TWO_PI * k / (self.n_phi - 1)

    def alpha_value(self, k: int) -> float:
        return 0.0 if self.n_alpha == 1 else TWO_PI * k / (self.n_alpha - 1)


def index_to_angles(mesh: MeshSpec, index: int) -> StrategyAngles:
    """The angle triple of 1-based strategy index `index`."""
    n = mesh.n_strategies
    if not (1 <= index <= n):
        raise ValueError(f"strategy index {index} out of range [1, {n}]")
    if index == 1:
        return StrategyAngles(0.0, 0.0, 0.0)
    if index == n:
        return StrategyAngles(0.0, 0.0, math.pi)
    k = index - 2
    per_theta = mesh.n_phi * mesh.n_alpha
    k_theta, rem = divmod(k, per_theta)
    k_phi, k_alpha = divmod(rem, mesh.n_alpha)
    return StrategyAngles(
        mesh.phi_value(k_phi), mesh.alpha_value(k_alpha), mesh.theta_value(k_theta + 1)
    )


def angles_to_index(mesh: MeshSpec, g: StrategyAngles, tol: float = 1e-9) -> int:
    """Inverse of index_to_angles; the triple must lie on the mesh within tol."""
    if g.theta <= tol:
        return 1
    if g.theta >= math.pi - tol:
        return mesh.n_strategies
    k_theta = round(g.theta * (mesh.n_theta - 1) / math.pi)
    k_phi = 0 if mesh.n_phi == 1 else round(g.phi * (mesh.n_phi - 1) / TWO_PI)
    k_alpha = 0 if mesh.n_alpha == 1 else round(g.alpha * (mesh.n_alpha - 1) / TWO_PI)
    if (
        not (1 <= k_theta <= mesh.n_theta - 2)
        or abs(mesh.theta_value(k_theta) - g.theta) > tol
        or abs(mesh.phi_value(k_phi) - g.phi) > tol
        or abs(mesh.alpha_value(k_alpha) - g.alpha) > tol
    ):
        raise ValueError(f"angles {g} do not lie on the mesh")
    return 2 + (k_theta - 1) * mesh.n_phi * mesh.n_alpha + k_phi * mesh.n_alpha + k_alpha


def mesh_angle_array(mesh: MeshSpec) -> np.ndarray:
    """All mesh strategies as an (N_S, 3) array of (phi, alpha, theta) rows."""
    thetas = np.linspace(0.0, math.pi, mesh.n_theta)
    phis = np.linspace(0.0, TWO_PI, mesh.n_phi) if mesh.n_phi > 1 else np.zeros(1)
    alphas = np.linspace(0.0, TWO_PI, mesh.n_alpha) if mesh.n_alpha > 1 else np.zeros(1)
    n = mesh.n_strategies
    out = np.zeros((n, 3))
    tt, pp, aa = np.meshgrid(thetas[1:-1], phis, alphas, indexing="ij")
    out[1:-1, 0] = pp.ravel()
    out[1:-1, 1] = aa.ravel()
    out[1:-1, 2] = tt.ravel()
    out[-1, 2] = math.pi
    return out
