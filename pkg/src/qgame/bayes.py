"""Bayesian version of the asymmetric dilemma at maximal entanglement.

Player 2 is one of two types: with probability mu the harsh type (whose
payoff table punishes mutual silence more), with probability 1-mu the mild
type. Player 1 plays one strategy against both; each type best-responds to
it. All payoffs use the maximally entangled closed-form amplitudes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .games import GameTable, closed_form_sq_amplitudes
from .mesh import MeshSpec, index_to_angles, mesh_angle_array
from .strategies import TWO_PI, StrategyAngles

# Player 2 type I: the standard asymmetric-dilemma brother.
GAME_TYPE_I = GameTable(
    name="bayes_type_I",
    u1=((0, -10), (-1, -5)),
    u2=((-2, -1), (-10, -5)),
)

# Player 2 type II: values silence differently (dominant strategy flips).
GAME_TYPE_II = GameTable(
    name="bayes_type_II",
    u1=((0, -10), (-1, -5)),
    u2=((-2, -7), (-10, -11)),
)


@dataclass(frozen=True)
class BayesSpec:
    mu: float
    game_2I: GameTable = GAME_TYPE_I
    game_2II: GameTable = GAME_TYPE_II

    def __post_init__(self):
        if not (0.0 <= self.mu <= 1.0):
            raise ValueError(f"mu out of range [0, 1]: {self.mu}")


@dataclass(frozen=True)
class BayesProfile:
    g1: StrategyAngles
    g2I: StrategyAngles
    g2II: StrategyAngles


class BayesPayoffs(NamedTuple):
    p1: float
    p2I: float
    p2II: float


def bayes_payoffs(spec: BayesSpec, prof: BayesProfile) -> BayesPayoffs:
    """Expected payoffs of the three participants.

    Each type's payoff comes from their own matchup with player 1;
    player 1's payoff mu-averages their payoffs across the two matchups.
    """
    w_i = np.array(closed_form_sq_amplitudes("psi_plus", prof.g1, prof.g2I))
    w_ii = np.array(closed_form_sq_amplitudes("psi_plus", prof.g1, prof.g2II))
    u1_i = spec.game_2I.u1_array().reshape(4)
    u1_ii = spec.game_2II.u1_array().reshape(4)
    p1 = spec.mu * float(w_i @ u1_i) + (1.0 - spec.mu) * float(w_ii @ u1_ii)
    p2i = float(w_i @ spec.game_2I.u2_array().reshape(4))
    p2ii = float(w_ii @ spec.game_2II.u2_array().reshape(4))
    return BayesPayoffs(p1, p2i, p2ii)


def bayes_best_response_2I(g1: StrategyAngles) -> StrategyAngles:
    """Type I's reply: full squared amplitude on |01>, their best column."""
    phi, alpha, theta = g1.as_tuple()
    return StrategyAngles((alpha - math.pi / 2) % TWO_PI, phi % TWO_PI, math.pi - theta)


def bayes_best_response_2II(g1: StrategyAngles) -> StrategyAngles:
    """Type II's reply: full squared amplitude on |00>, their best column."""
    phi, alpha, theta = g1.as_tuple()
    return StrategyAngles((-phi) % TWO_PI, (-(alpha + math.pi / 2)) % TWO_PI, theta)


# The equilibrium-candidate opponent profile: each type's best reply to
# player 1 playing the identity, with pole angles canonicalized.
_G2I_STAR = StrategyAngles(0.0, 0.0, math.pi)
_G2II_STAR = StrategyAngles(0.0, 0.0, 0.0)


def p1_given_best_responses(mu: float, g1: StrategyAngles) -> float:
    """Player 1's payoff against the candidate type replies, in closed form.

    Both opponent types hold the strategies that best-respond to the
    identity; the resulting payoff surface over g1 decides whether the
    identity is player 1's global maximizer. Equals the bayes_payoffs path
    with the opponents fixed at those strategies.
    """
    if not (0.0 <= mu <= 1.0):
        raise ValueError(f"mu out of range [0, 1]: {mu}")
    phi, alpha, theta = g1.as_tuple()
    c = math.cos(theta / 2.0)
    s = math.sin(theta / 2.0)
    return (
        -10.0 * (mu * (c * math.cos(phi)) ** 2 + (1 - mu) * (s * math.sin(alpha)) ** 2)
        - (mu * (c * math.sin(phi)) ** 2 + (1 - mu) * (s * math.cos(alpha)) ** 2)
        - 5.0 * (mu * (s * math.cos(alpha)) ** 2 + (1 - mu) * (c * math.sin(phi)) ** 2)
    )


def candidate_profile(g1: StrategyAngles) -> BayesProfile:
    """Profile pairing g1 with the candidate equilibrium type strategies."""
    return BayesProfile(g1=g1, g2I=_G2I_STAR, g2II=_G2II_STAR)


class BayesVerdict(NamedTuple):
    verdict: str  # "ne_at_origin" or "no_ne"
    origin_p1: float
    max_p1: float
    argmax: StrategyAngles
    margin: float  # max_p1 - origin_p1


def bayes_ne_check(mu: float, grid: MeshSpec) -> BayesVerdict:
    """Grid test of whether the identity strategy is player 1's best reply.

    Maximizes player 1's payoff against the candidate type replies over the
    mesh. Verdict "ne_at_origin" when the identity attains the grid maximum
    within 1e-9 (the full profile is then an equilibrium), "no_ne" when
    some grid strategy strictly exceeds it by more than 1e-9 (player 1
    would deviate, and no other candidate survives the types' unique best
    replies). Ties resolve to the lowest strategy index.
    """
    if not (0.0 <= mu <= 1.0):
        raise ValueError(f"mu out of range [0, 1]: {mu}")
    angles = mesh_angle_array(grid)
    phi, alpha, theta = angles[:, 0], angles[:, 1], angles[:, 2]
    c = np.cos(theta / 2.0)
    s = np.sin(theta / 2.0)
    p1 = (
        -10.0 * (mu * (c * np.cos(phi)) ** 2 + (1 - mu) * (s * np.sin(alpha)) ** 2)
        - (mu * (c * np.sin(phi)) ** 2 + (1 - mu) * (s * np.cos(alpha)) ** 2)
        - 5.0 * (mu * (s * np.cos(alpha)) ** 2 + (1 - mu) * (c * np.sin(phi)) ** 2)
    )
    origin = float(p1[0])  # index 1 is the theta=0 pole, the identity
    k = int(np.argmax(p1))  # argmax takes the lowest index on ties
    best = float(p1[k])
    margin = best - origin
    verdict = "ne_at_origin" if margin <= 1e-9 else "no_ne"
    return BayesVerdict(verdict, origin, best, index_to_angles(grid, k + 1), margin)


def classical_threshold_mu() -> float:
    """Exact indifference point of the classical comparison.

    Player 1 compares the confession payoff line -10*mu with the silence
    payoff line -5*mu - (1-mu); the two linear forms cross at mu = 1/6.
    """
    # Solve -10 mu = -5 mu - (1 - mu) for mu: coefficients of the
    # difference (-10 + 5 - 1) mu + 1 = 0.
    return 1.0 / 6.0
