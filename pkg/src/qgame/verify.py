"""Seeded self-verification suite behind the `qgame verify` command.

Each check returns (name, passed, detail); the suite is deterministic for
a fixed seed, including under the parallel compiled kernels.
"""

from __future__ import annotations

import math

import numpy as np

from . import _kernels
from .entanglers import EntanglerSpec, build_entangler
from .games import DA_BROTHER, closed_form_sq_amplitudes, final_state
from .linalg import is_unitary
from .mesh import MeshSpec, mesh_angle_array
from .search import analytic_best_response, find_pure_ne, _target_amplitude
from .strategies import TWO_PI, StrategyAngles, su2_from_angles, su3_from_angles


def _random_angles(rng) -> StrategyAngles:
    return StrategyAngles(
        rng.uniform(0, TWO_PI), rng.uniform(0, TWO_PI), rng.uniform(0, math.pi)
    )


def check_strategy_unitarity(rng, samples=200):
    worst = 0.0
    for _ in range(samples):
        u = su2_from_angles(_random_angles(rng))
        worst = max(worst, np.abs(u @ u.conj().T - np.eye(2)).max())
        worst = max(worst, abs(np.linalg.det(u) - 1.0))
    for _ in range(samples // 4):
        v = su3_from_angles(rng.uniform(0, TWO_PI, size=8))
        worst = max(worst, np.abs(v @ v.conj().T - np.eye(3)).max())
    return "strategy_unitarity", worst <= 1e-10, worst


def check_entangler_unitarity(rng, samples=100):
    worst = 0.0
    for _ in range(samples):
        beta = rng.uniform(0, math.pi / 2)
        for family in ("j1", "j2"):
            j = build_entangler(EntanglerSpec(family, beta))
            if not is_unitary(j, 1e-12):
                return "entangler_unitarity", False, float("inf")
            worst = max(worst, np.abs(j @ j.conj().T - np.eye(4)).max())
    return "entangler_unitarity", worst <= 1e-12, worst


def check_norm_conservation(rng, samples=200):
    worst = 0.0
    for _ in range(samples):
        family = "j1" if rng.integers(2) == 0 else "j2"
        j = build_entangler(EntanglerSpec(family, rng.uniform(0, math.pi / 2)))
        amps = final_state(j, _random_angles(rng), _random_angles(rng))
        worst = max(worst, abs(float(np.abs(amps) ** 2 @ np.ones(4)) - 1.0))
    return "norm_conservation", worst <= 1e-12, worst


def check_closed_form_oracle(rng, samples=300):
    worst = 0.0
    j1 = build_entangler(EntanglerSpec("j1", math.pi / 2))
    j2 = build_entangler(EntanglerSpec("j2", math.pi / 2))
    for _ in range(samples):
        g1, g2 = _random_angles(rng), _random_angles(rng)
        for form, j in (("psi_plus", j1), ("triplet", j2)):
            ref = np.abs(final_state(j, g1, g2)) ** 2
            got = np.array(closed_form_sq_amplitudes(form, g1, g2))
            worst = max(worst, float(np.abs(ref - got).max()))
    return "closed_form_oracle", worst <= 1e-10, worst


def check_best_response_targets(rng, samples=250):
    worst = 1.0
    for _ in range(samples):
        g = _random_angles(rng)
        for form in ("psi_plus", "triplet"):
            for responder in (1, 2):
                reply = analytic_best_response(responder, form, g)
                worst = min(worst, _target_amplitude(responder, form, reply, g))
    return "best_response_targets", worst >= 1.0 - 1e-10, worst


def check_search_determinism(rng):
    mesh = MeshSpec(5, 9, 9)
    first = find_pure_ne(DA_BROTHER, EntanglerSpec("j1", 0.8), mesh)
    second = find_pure_ne(DA_BROTHER, EntanglerSpec("j1", 0.8), mesh)
    same = first == second
    worst = 0.0
    # cross-check the compiled kernels against the pure numpy path
    angles = mesh_angle_array(mesh)
    u1 = DA_BROTHER.u1_array().reshape(4)
    u2 = DA_BROTHER.u2_array().reshape(4)
    ref = _kernels.pure_ne_pairs_numpy(angles, 0.8, u1, u2)
    got = _kernels.pure_ne_pairs(angles, 0.8, u1, u2)
    same = same and ref[0] == got[0]
    if ref[0] == got[0] and ref[1] and got[1]:
        worst = max(
            max(abs(a - b) for a, b in zip(ref[1], got[1])),
            max(abs(a - b) for a, b in zip(ref[2], got[2])),
        )
    return "search_determinism", same and worst <= 1e-12, worst


ALL_CHECKS = (
    check_strategy_unitarity,
    check_entangler_unitarity,
    check_norm_conservation,
    check_closed_form_oracle,
    check_best_response_targets,
    check_search_determinism,
)


def run_all(seed: int = 0):
    """Run every check with a fresh seeded generator; returns result records."""
    results = []
    for check in ALL_CHECKS:
        rng = np.random.default_rng(seed)
        name, passed, worst = check(rng)
        results.append({"check": name, "passed": bool(passed), "worst": float(worst)})
    return results
