"""Classical 2x2 game tables, the quantization protocol and payoffs.

The protocol: the referee entangles |00> with J, each player applies an
SU(2) strategy to their own qubit, the referee applies J^dag, and payoffs
are the squared final amplitudes weighted by the classical payoff table.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from importlib import resources
from typing import NamedTuple, Sequence

import numpy as np

from .linalg import dagger, is_unitary, tensor
from .strategies import StrategyAngles, su2_from_angles

CLOSED_FORMS = ("psi_plus", "triplet")


class GameFormatError(ValueError):
    """A game file is malformed; the message names the offending field."""


@dataclass(frozen=True)
class GameTable:
    """A 2x2 bimatrix game.

    u1[r][c] (u2[r][c]) is player 1's (player 2's) payoff when player 1
    plays gate index r and player 2 plays gate index c, with index 0 the
    identity gate and index 1 the flip gate Y. Payoffs are stored as
    printed in the usual normal form (e.g. negative years in prison).
    """

    name: str
    u1: tuple[tuple[float, float], tuple[float, float]]
    u2: tuple[tuple[float, float], tuple[float, float]]

    def __post_init__(self):
        for field in ("u1", "u2"):
            raw = getattr(self, field)
            try:
                grid = tuple(tuple(float(x) for x in row) for row in raw)
            except (TypeError, ValueError) as exc:
                raise GameFormatError(f"field {field!r} is not a 2x2 number grid") from exc
            if len(grid) != 2 or any(len(row) != 2 for row in grid):
                raise GameFormatError(f"field {field!r} must be 2x2, got {raw!r}")
            if not all(math.isfinite(x) for row in grid for x in row):
                raise GameFormatError(f"field {field!r} contains non-finite entries")
            object.__setattr__(self, field, grid)

    def u1_array(self) -> np.ndarray:
        return np.array(self.u1, dtype=float)

    def u2_array(self) -> np.ndarray:
        return np.array(self.u2, dtype=float)


class PayoffPair(NamedTuple):
    p1: float
    p2: float


PRISONER_DILEMMA = GameTable(
    name="prisoner_dilemma",
    u1=((-4, -6), (-2, -5)),
    u2=((-4, -2), (-6, -5)),
)

# Asymmetric variant: the district attorney promises player 1 freedom for
# confessing while the brother faces the standard dilemma numbers.
DA_BROTHER = GameTable(
    name="da_brother",
    u1=((0, -10), (-1, -5)),
    u2=((-2, -1), (-10, -5)),
)

BUILTIN_GAMES = {g.name: g for g in (PRISONER_DILEMMA, DA_BROTHER)}


def final_state(j: np.ndarray, g1: StrategyAngles, g2: StrategyAngles) -> np.ndarray:
    """Final four amplitudes of the protocol: J^dag (U1 x U2) J |00>."""
    j = np.asarray(j, dtype=complex)
    if not is_unitary(j):
        raise ValueError("entangler must be a unitary 4x4 matrix")
    u = tensor(su2_from_angles(g1), su2_from_angles(g2))
    e0 = np.zeros(4, dtype=complex)
    e0[0] = 1.0
    return dagger(j) @ (u @ (j @ e0))


def payoffs(amps: np.ndarray, game: GameTable) -> PayoffPair:
    """Payoffs from a final amplitude vector: squared magnitudes weight the table."""
    w = np.abs(np.asarray(amps, dtype=complex).reshape(4)) ** 2
    u1 = game.u1_array().reshape(4)
    u2 = game.u2_array().reshape(4)
    return PayoffPair(float(w @ u1), float(w @ u2))


def closed_form_sq_amplitudes(
    form: str, g1: StrategyAngles, g2: StrategyAngles
) -> tuple[float, float, float, float]:
    """Squared final amplitudes at maximal entanglement, in closed form.

    form="psi_plus": the entangled carrier state is (|00>+i|11>)/sqrt(2)
    (the J1 protocol at beta=pi/2); form="triplet": the carrier is
    (|01>+|10>)/sqrt(2) (the J2 protocol). Both match the direct matrix
    computation to machine precision.
    """
    return _closed_form_sq_raw(form, g1.as_tuple(), g2.as_tuple())


def _closed_form_sq_raw(form, angles1, angles2):
    """closed_form_sq_amplitudes on raw angle triples, without the pole
    canonicalization applied by StrategyAngles (phases matter at the poles:
    e.g. theta=0 with phi=pi/2 is the diag(i, -i) strategy)."""
    p1, a1, t1 = angles1
    p2, a2, t2 = angles2
    c1, s1 = math.cos(t1 / 2), math.sin(t1 / 2)
    c2, s2 = math.cos(t2 / 2), math.sin(t2 / 2)
    if form == "psi_plus":
        a = c1 * c2 * math.cos(p1 + p2) - s1 * s2 * math.sin(a1 + a2)
        b = c1 * s2 * math.cos(p1 - a2) + s1 * c2 * math.sin(a1 - p2)
        c = s1 * c2 * math.cos(a1 - p2) - c1 * s2 * math.sin(p1 - a2)
        d = s1 * s2 * math.cos(a1 + a2) + c1 * c2 * math.sin(p1 + p2)
    elif form == "triplet":
        a = c1 * c2 * math.cos(p1 - p2) - s1 * s2 * math.cos(a1 - a2)
        b = c1 * s2 * math.sin(p1 + a2) + s1 * c2 * math.sin(a1 + p2)
        c = s1 * s2 * math.sin(a1 - a2) - c1 * c2 * math.sin(p1 - p2)
        d = s1 * c2 * math.cos(a1 + p2) + c1 * s2 * math.cos(p1 + a2)
    else:
        raise ValueError(f"unknown closed form {form!r}")
    return (a * a, b * b, c * c, d * d)


def closed_form_amplitudes_partial(
    beta: float, g1: StrategyAngles, g2: StrategyAngles
) -> np.ndarray:
    """Complex final amplitudes for the J1 protocol at entanglement beta.

    The squared magnitudes agree with final_state(J1(beta), g1, g2) to
    machine precision for every beta; the individual component phases
    follow this closed form's own convention and are not guaranteed to
    match the matrix protocol entrywise. At beta=pi/2 the squared
    magnitudes reduce to the "psi_plus" closed form.
    """
    if not (0.0 <= beta <= math.pi / 2 + 1e-12):
        raise ValueError(f"beta out of range [0, pi/2]: {beta}")
    p1, a1, t1 = g1.as_tuple()
    p2, a2, t2 = g2.as_tuple()
    c1, s1 = math.cos(t1 / 2), math.sin(t1 / 2)
    c2, s2 = math.cos(t2 / 2), math.sin(t2 / 2)
    sb, cb = math.sin(beta), math.cos(beta)
    a = (c1 * c2 * math.cos(p1 + p2) - s1 * s2 * math.sin(a1 + a2) * sb) + 1j * (
        c1 * c2 * math.sin(p1 + p2) * cb
    )
    b = (c1 * s2 * math.cos(p1 - a2) + s1 * c2 * math.sin(a1 - p2) * sb) + 1j * (
        c1 * s2 * math.sin(p1 - a2) * cb
    )
    c = (s1 * c2 * math.cos(a1 - p2) - c1 * s2 * math.sin(p1 - a2) * sb) - 1j * (
        s1 * c2 * math.sin(a1 - p2) * cb
    )
    d = (s1 * s2 * math.cos(a1 + a2) + c1 * c2 * math.sin(p1 + p2) * sb) - 1j * (
        s1 * s2 * math.sin(a1 + a2) * cb
    )
    return np.array([a, b, c, d], dtype=complex)


@dataclass(frozen=True)
class MixedStrategy:
    """Finite-support probability distribution over strategy angle triples."""

    support: tuple[tuple[StrategyAngles, float], ...]

    def __post_init__(self):
        support = tuple((g, float(p)) for g, p in self.support)
        if not support:
            raise ValueError("mixed strategy needs a non-empty support")
        if any(p < 0 or p > 1 for _, p in support):
            raise ValueError("probabilities must lie in [0, 1]")
        total = sum(p for _, p in support)
        if abs(total - 1.0) > 1e-12:
            raise ValueError(f"probabilities must sum to 1, got {total}")
        object.__setattr__(self, "support", support)

    @classmethod
    def point(cls, g: StrategyAngles) -> "MixedStrategy":
        return cls(((g, 1.0),))

    @classmethod
    def uniform(cls, gs: Sequence[StrategyAngles]) -> "MixedStrategy":
        p = 1.0 / len(gs)
        return cls(tuple((g, p) for g in gs))


def mixed_payoff(
    m1: MixedStrategy, m2: MixedStrategy, j: np.ndarray, game: GameTable
) -> PayoffPair:
    """Expected payoffs when both players randomize independently."""
    tot1 = tot2 = 0.0
    for g1, p1 in m1.support:
        for g2, p2 in m2.support:
            pay = payoffs(final_state(j, g1, g2), game)
            tot1 += p1 * p2 * pay.p1
            tot2 += p1 * p2 * pay.p2
    return PayoffPair(tot1, tot2)


def _table_from_obj(obj: dict, source: str) -> GameTable:
    if not isinstance(obj, dict):
        raise GameFormatError(f"{source}: top level must be an object")
    for field in ("name", "u1", "u2"):
        if field not in obj:
            raise GameFormatError(f"{source}: missing field {field!r}")
    if not isinstance(obj["name"], str):
        raise GameFormatError(f"{source}: field 'name' must be a string")
    return GameTable(name=obj["name"], u1=obj["u1"], u2=obj["u2"])


def load_game(path: str) -> GameTable:
    """Load a game table from a JSON file {"name": ..., "u1": ..., "u2": ...}."""
    with open(path, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise GameFormatError(f"{path}: invalid JSON: {exc}") from exc
    return _table_from_obj(obj, str(path))


def save_game(game: GameTable, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(
            {"name": game.name, "u1": [list(r) for r in game.u1], "u2": [list(r) for r in game.u2]},
            fh,
            indent=2,
        )
        fh.write("\n")


def resolve_game(name_or_path: str) -> GameTable:
    """A built-in game by name ("prisoner_dilemma", "da_brother") or a JSON path."""
    if name_or_path in BUILTIN_GAMES:
        return BUILTIN_GAMES[name_or_path]
    return load_game(name_or_path)


def builtin_game_json(name: str) -> str:
    """The packaged JSON fixture text for a built-in game."""
    return resources.files("qgame.data").joinpath(f"{name}.json").read_text()
