"""Best-response tables, pure Nash equilibrium mesh search and beta sweeps."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .entanglers import EntanglerSpec, build_entangler
from .games import (
    PRISONER_DILEMMA,
    GameTable,
    PayoffPair,
    _closed_form_sq_raw,
    closed_form_sq_amplitudes,
    payoffs,
)
from .mesh import MeshSpec, mesh_angle_array
from .strategies import TWO_PI, StrategyAngles

TIE_TOL = 1e-9


@dataclass(frozen=True)
class NeResult:
    """Outcome of a pure-strategy equilibrium search at one beta value.

    pairs holds (I1, I2, PayoffPair) with 1-based strategy indices in
    lexicographic order; every listed pair is a mutual best response within
    the tie tolerance.
    """

    beta: float
    found: bool
    pairs: tuple[tuple[int, int, PayoffPair], ...]

    @property
    def first_pair(self):
        return self.pairs[0] if self.pairs else None


def _tables_for(game: GameTable, spec_or_j, mesh: MeshSpec):
    """Full payoff tables for a mesh, via closed form or operator protocol."""
    angles = mesh_angle_array(mesh)
    u1 = game.u1_array().reshape(4)
    u2 = game.u2_array().reshape(4)
    if isinstance(spec_or_j, EntanglerSpec):
        if spec_or_j.family in ("j1", "identity"):
            beta = spec_or_j.beta if spec_or_j.family == "j1" else 0.0
            return _kernels.payoff_tables(angles, beta, u1, u2)
        return _kernels.payoff_tables_matrix(angles, build_entangler(spec_or_j), u1, u2)
    return _kernels.payoff_tables_matrix(angles, np.asarray(spec_or_j, dtype=complex), u1, u2)


def best_response_table(game: GameTable, spec_or_j, mesh: MeshSpec, responder: int):
    """Best replies of one player to every opponent strategy on the mesh.

    Accepts either an EntanglerSpec or an explicit 4x4 unitary. Returns a
    list indexed by 1-based opponent strategy index; entry I is the set of
    1-based responder indices within the tie tolerance of the maximum
    payoff. Entry 0 is unused.
    """
    if responder not in (1, 2):
        raise ValueError("responder must be 1 or 2")
    p1, p2 = _tables_for(game, spec_or_j, mesh)
    n = p1.shape[0]
    table = [set()]
    if responder == 2:
        cutoff = p2.max(axis=1) - TIE_TOL
        for i in range(n):
            table.append({int(j) + 1 for j in np.nonzero(p2[i] >= cutoff[i])[0]})
    else:
        cutoff = p1.max(axis=0) - TIE_TOL
        for j in range(n):
            table.append({int(i) + 1 for i in np.nonzero(p1[:, j] >= cutoff[j])[0]})
    return table


def find_pure_ne(
    game: GameTable, spec: EntanglerSpec, mesh: MeshSpec, use_matrix: bool = False
) -> NeResult:
    """All pure-strategy Nash equilibria of the quantized game on the mesh.

    A pair (I1, I2) qualifies when I2 is within the tie tolerance of
    player 2's best reply to I1 and I1 of player 1's best reply to I2.
    The default path evaluates the closed-form amplitudes through the
    compiled kernels; use_matrix forces the explicit operator protocol for
    cross-checking.
    """
    angles = mesh_angle_array(mesh)
    u1 = game.u1_array().reshape(4)
    u2 = game.u2_array().reshape(4)
    closed_form_ok = spec.family in ("j1", "identity") and not use_matrix
    if closed_form_ok:
        beta = spec.beta if spec.family == "j1" else 0.0
        pairs, pay1, pay2 = _kernels.pure_ne_pairs(angles, beta, u1, u2, TIE_TOL)
    else:
        p1, p2 = _kernels.payoff_tables_matrix(angles, build_entangler(spec), u1, u2)
        mask = (p2 >= p2.max(axis=1)[:, None] - TIE_TOL) & (p1 >= p1.max(axis=0)[None, :] - TIE_TOL)
        idx = np.argwhere(mask)
        pairs = [(int(i), int(j)) for i, j in idx]
        pay1 = [float(p1[i, j]) for i, j in idx]
        pay2 = [float(p2[i, j]) for i, j in idx]
    listed = tuple(
        (i + 1, j + 1, PayoffPair(a, b)) for (i, j), a, b in zip(pairs, pay1, pay2)
    )
    beta = spec.beta if spec.family == "j1" else (0.0 if spec.family == "identity" else spec.beta)
    return NeResult(beta=beta, found=bool(listed), pairs=listed)


def sweep_beta(game: GameTable, family: str, mesh: MeshSpec, betas) -> list[NeResult]:
    """find_pure_ne at each beta of an ascending grid."""
    betas = [float(b) for b in betas]
    if any(b2 < b1 for b1, b2 in zip(betas, betas[1:])):
        raise ValueError("betas must be sorted ascending")
    return [find_pure_ne(game, EntanglerSpec(family, b), mesh) for b in betas]


def threshold_beta(results: list[NeResult]):
    """Largest swept beta at which an equilibrium was found, or None."""
    found = [r.beta for r in results if r.found]
    return found[-1] if found else None


def analytic_best_response(responder: int, form: str, g_opp: StrategyAngles) -> StrategyAngles:
    """A reply achieving squared target amplitude 1 at maximal entanglement.

    Under the "psi_plus" form, player 2's reply concentrates the full
    squared amplitude on |01> (their preferred asymmetric outcome) and
    player 1's on |10>; under the "triplet" form the same targets are
    reached with the triplet-adapted angle maps. The target amplitude is 1
    exactly up to rounding for any opponent.

    Two angle maps reach each target (they differ by pi in both phase
    angles and give strategy matrices of opposite sign). For responder 1
    under "psi_plus" the map is chosen per input so that alternating best
    replies return to the starting strategy after four steps.
    """
    if responder not in (1, 2):
        raise ValueError("responder must be 1 or 2")
    return StrategyAngles(*_raw_best_response(responder, form, g_opp.as_tuple()))


def _raw_best_response(responder: int, form: str, opp_angles):
    """analytic_best_response as a raw angle triple.

    Skips the pole canonicalization of StrategyAngles, which discards the
    phase angles at theta in {0, pi} and can therefore lose the reply's
    target amplitude when the reply lands on a pole.
    """
    phi, alpha, theta = opp_angles
    if form == "psi_plus":
        if responder == 2:
            out = ((alpha - math.pi / 2) % TWO_PI, phi % TWO_PI, math.pi - theta)
        else:
            out = ((alpha - math.pi / 2) % TWO_PI, phi % TWO_PI, math.pi - theta)
            if (alpha % math.pi) >= math.pi / 2:
                out = ((out[0] + math.pi) % TWO_PI, (out[1] + math.pi) % TWO_PI, out[2])
    elif form == "triplet":
        if responder == 2:
            out = ((math.pi / 2 - alpha) % TWO_PI, (math.pi / 2 - phi) % TWO_PI, math.pi - theta)
        else:
            out = ((phi - math.pi / 2) % TWO_PI, (alpha + math.pi / 2) % TWO_PI, theta)
    else:
        raise ValueError(f"unknown closed form {form!r}")
    return out


def _target_amplitude(responder: int, form: str, g_resp: StrategyAngles, g_opp: StrategyAngles) -> float:
    if responder == 2:
        return closed_form_sq_amplitudes(form, g_opp, g_resp)[1]
    return closed_form_sq_amplitudes(form, g_resp, g_opp)[2]


def no_psne_certificate(
    form: str, samples: int, game: GameTable = PRISONER_DILEMMA, seed: int = 0
) -> bool:
    """Numerical certificate that the maximally entangled game has no pure NE.

    Samples strategy pairs (always including the classical corner pairs)
    and checks that at every pair at least one player's analytic best
    response strictly improves that player's payoff. Replies are evaluated
    with their raw angles, since the pole canonicalization of
    StrategyAngles would discard a phase the improvement may need. For a
    prisoner-dilemma-type table the improvement always exists because the
    two response conditions (full squared amplitude on |01> versus on
    |10>) cannot hold simultaneously; for a table whose mutually best
    outcome sits at |01> the certificate fails at that settlement point.
    """
    if samples < 1:
        raise ValueError("samples must be at least 1")
    rng = np.random.default_rng(seed)
    pole0 = (0.0, 0.0, 0.0)
    pole1 = (0.0, 0.0, math.pi)
    pairs = [(pole0, pole0), (pole0, pole1), (pole1, pole0), (pole1, pole1)]
    for _ in range(samples):
        g1 = (rng.uniform(0, TWO_PI), rng.uniform(0, TWO_PI), rng.uniform(0, math.pi))
        g2 = (rng.uniform(0, TWO_PI), rng.uniform(0, TWO_PI), rng.uniform(0, math.pi))
        pairs.append((g1, g2))
    for t1, t2 in pairs:
        current = payoffs(np.sqrt(_closed_form_sq_raw(form, t1, t2)), game)
        reply2 = _raw_best_response(2, form, t1)
        improved2 = payoffs(np.sqrt(_closed_form_sq_raw(form, t1, reply2)), game).p2
        reply1 = _raw_best_response(1, form, t2)
        improved1 = payoffs(np.sqrt(_closed_form_sq_raw(form, reply1, t2)), game).p1
        if improved2 <= current.p2 + 1e-12 and improved1 <= current.p1 + 1e-12:
            return False
    return True


def mixed_cycle(g1: StrategyAngles):
    """The four-strategy best-response cycle seeded at g1.

    Returns (g2, g1', g2') with g2 the reply of player 2 to g1, g1' the
    reply of player 1 to g2 and g2' the reply of player 2 to g1'; one more
    reply of player 1 to g2' closes the cycle back at g1.
    """
    g2 = analytic_best_response(2, "psi_plus", g1)
    g1p = analytic_best_response(1, "psi_plus", g2)
    g2p = analytic_best_response(2, "psi_plus", g1p)
    return g2, g1p, g2p
