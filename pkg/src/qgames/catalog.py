"""The strategic-game catalog: payoff tables, constraints, classical analysis.

Six 2x2 games are built in. Outcomes are indexed n = 2j + l where j is
Alice's strategy bit and l is Bob's; ``payoffs_a[n]`` / ``payoffs_b[n]``
are the two players' payoffs at that outcome. The symmetric games carry
their four ranked payoff levels (best to worst) so the standard ordering
constraints can be validated.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from .ewl import OutcomeDistribution

OUTCOME_KEYS = ("00", "01", "10", "11")


class PayoffPair(NamedTuple):
    alice: float
    bob: float


@dataclass(frozen=True)
class GameSpec:
    """A 2x2 strategic game.

    ``labels`` holds each player's two strategy names, in the order of the
    strategy bits. ``symmetric_params`` are the ranked payoff levels
    (alpha, beta, gamma, delta) of the symmetric four-parameter form, or
    (alpha, beta, gamma) for the battle of the sexes; None otherwise.
    """

    name: str
    labels: tuple[tuple[str, str], tuple[str, str]]
    payoffs_a: tuple[float, float, float, float]
    payoffs_b: tuple[float, float, float, float]
    symmetric: bool = False
    zero_sum: bool = False
    discoordination: bool = False
    symmetric_params: Optional[tuple[float, ...]] = field(default=None)

    def __post_init__(self):
        if self.zero_sum:
            for a, b in zip(self.payoffs_a, self.payoffs_b):
                if abs(a + b) > 1e-12:
                    raise ValueError(f"{self.name}: zero-sum flag violated at payoff ({a}, {b})")
        if self.symmetric:
            for j, l in itertools.product(range(2), range(2)):
                if abs(self.payoffs_b[2 * j + l] - self.payoffs_a[2 * l + j]) > 1e-12:
                    raise ValueError(f"{self.name}: symmetric flag violated")

    def payoff_pair(self, n: int) -> PayoffPair:
        return PayoffPair(self.payoffs_a[n], self.payoffs_b[n])

    def cell_label(self, j: int, l: int) -> tuple[str, str]:
        return (self.labels[0][j], self.labels[1][l])

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "labels": [list(self.labels[0]), list(self.labels[1])],
            "payoffs": {
                key: [self.payoffs_a[n], self.payoffs_b[n]]
                for n, key in enumerate(OUTCOME_KEYS)
            },
            "flags": {
                "symmetric": self.symmetric,
                "zero_sum": self.zero_sum,
                "discoordination": self.discoordination,
            },
        }

    @staticmethod
    def from_json_dict(data: dict) -> "GameSpec":
        flags = data.get("flags", {})
        pay = data["payoffs"]
        return GameSpec(
            name=data["name"],
            labels=(tuple(data["labels"][0]), tuple(data["labels"][1])),
            payoffs_a=tuple(float(pay[key][0]) for key in OUTCOME_KEYS),
            payoffs_b=tuple(float(pay[key][1]) for key in OUTCOME_KEYS),
            symmetric=bool(flags.get("symmetric", False)),
            zero_sum=bool(flags.get("zero_sum", False)),
            discoordination=bool(flags.get("discoordination", False)),
        )


def load_game(path: str) -> GameSpec:
    with open(path, "r", encoding="utf-8") as handle:
        return GameSpec.from_json_dict(json.load(handle))


def _symmetric_game(name, labels, levels, a_map, **flags) -> GameSpec:
    # a_map assigns one of the ranked levels (by index) to each outcome n.
    a = tuple(levels[i] for i in a_map)
    b = (a[0], a[2], a[1], a[3])
    return GameSpec(
        name=name,
        labels=(labels, labels),
        payoffs_a=a,
        payoffs_b=b,
        symmetric=True,
        symmetric_params=levels,
        **flags,
    )


def _builtin_games() -> dict[str, GameSpec]:
    games = {}

    # Prisoner's dilemma: mutual second-best on 00, temptation on 10.
    games["PD"] = _symmetric_game(
        "PD", ("C", "D"), (5.0, 3.0, 1.0, 0.0), a_map=(1, 3, 0, 2)
    )
    # Chicken: swap the two lowest levels relative to PD.
    games["CG"] = _symmetric_game(
        "CG", ("S", "C"), (4.0, 3.0, 2.0, 1.0), a_map=(1, 2, 0, 3)
    )
    # Stag hunt: swap the two highest levels relative to PD.
    games["SH"] = _symmetric_game(
        "SH", ("S", "R"), (6.0, 4.0, 1.0, 0.0), a_map=(0, 3, 1, 2)
    )
    # Battle of the sexes: coordination with opposed preferences.
    alpha, beta, gamma = 2.0, 1.0, 0.0
    games["BoS"] = GameSpec(
        name="BoS",
        labels=(("O", "F"), ("O", "F")),
        payoffs_a=(alpha, gamma, gamma, beta),
        payoffs_b=(beta, gamma, gamma, alpha),
        symmetric_params=(alpha, beta, gamma),
    )
    # Matching pennies: zero-sum discoordination.
    games["MP"] = GameSpec(
        name="MP",
        labels=(("H", "T"), ("H", "T")),
        payoffs_a=(-1.0, 1.0, 1.0, -1.0),
        payoffs_b=(1.0, -1.0, -1.0, 1.0),
        zero_sum=True,
        discoordination=True,
    )
    # Samaritan's dilemma: asymmetric discoordination, not zero sum.
    games["SD"] = GameSpec(
        name="SD",
        labels=(("A", "N"), ("W", "L")),
        payoffs_a=(3.0, -1.0, -1.0, 0.0),
        payoffs_b=(2.0, 3.0, 1.0, 0.0),
        discoordination=True,
    )
    return games


_GAMES = _builtin_games()
GAME_NAMES = tuple(_GAMES)


def builtin(name: str) -> GameSpec:
    """Return a built-in game by name (PD, CG, SH, BoS, MP, SD)."""
    try:
        return _GAMES[name]
    except KeyError:
        raise ValueError(f"unknown game {name!r}; choose from {', '.join(GAME_NAMES)}") from None


@dataclass(frozen=True)
class ConstraintCheck:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class ConstraintReport:
    checks: tuple[ConstraintCheck, ...]

    @property
    def all_passed(self) -> bool:
        return all(check.passed for check in self.checks)


def validate(game: GameSpec) -> ConstraintReport:
    """Evaluate the payoff-ordering constraints applicable to a game.

    Symmetric four-level games are checked for the strict ordering, the
    efficiency condition 2*beta > alpha + delta and the per-game relation
    between alpha + delta and beta + gamma. Games outside that family get
    only the checks that apply to them (ordering for BoS, the zero-sum
    identity for MP). Failures are reported, not raised.
    """
    checks: list[ConstraintCheck] = []
    params = game.symmetric_params
    if game.symmetric and params is not None and len(params) == 4:
        alpha, beta, gamma, delta = params
        checks.append(
            ConstraintCheck(
                "ordering",
                alpha > beta > gamma > delta,
                f"alpha > beta > gamma > delta with {params}",
            )
        )
        checks.append(
            ConstraintCheck(
                "efficiency",
                2 * beta > alpha + delta,
                f"2*beta = {2 * beta} vs alpha + delta = {alpha + delta}",
            )
        )
        if game.name == "CG":
            passed = abs((alpha + delta) - (beta + gamma)) <= 1e-12
            detail = f"alpha + delta = {alpha + delta} equals beta + gamma = {beta + gamma}"
        else:
            passed = alpha + delta > beta + gamma
            detail = f"alpha + delta = {alpha + delta} > beta + gamma = {beta + gamma}"
        checks.append(ConstraintCheck("sum_condition", passed, detail))
    elif params is not None and len(params) == 3:
        alpha, beta, gamma = params
        checks.append(
            ConstraintCheck(
                "ordering", alpha > beta > gamma, f"alpha > beta > gamma with {params}"
            )
        )
    if game.zero_sum:
        passed = all(abs(a + b) <= 1e-12 for a, b in zip(game.payoffs_a, game.payoffs_b))
        checks.append(ConstraintCheck("zero_sum", passed, "a_n + b_n = 0 for every outcome"))
    return ConstraintReport(tuple(checks))


def expected_payoffs(game: GameSpec, dist: OutcomeDistribution) -> PayoffPair:
    """Expected payoffs sum_n a_n P_n, sum_n b_n P_n."""
    alice = sum(a * p for a, p in zip(game.payoffs_a, dist))
    bob = sum(b * p for b, p in zip(game.payoffs_b, dist))
    return PayoffPair(alice, bob)


def pure_nash(game: GameSpec) -> list[tuple[int, int]]:
    """All pure-strategy cells (j, l) that are mutual best responses.

    Ties count as best responses, so weak equilibria are included.
    """
    cells = []
    for j, l in itertools.product(range(2), range(2)):
        a_here = game.payoffs_a[2 * j + l]
        b_here = game.payoffs_b[2 * j + l]
        if a_here >= game.payoffs_a[2 * (1 - j) + l] and b_here >= game.payoffs_b[2 * j + (1 - l)]:
            cells.append((j, l))
    return cells


class MixedEquilibrium(NamedTuple):
    """Interior mixed equilibrium: probabilities of each player's first strategy."""

    p_alice: float
    q_bob: float
    payoffs: PayoffPair


def mixed_nash_2x2(game: GameSpec) -> Optional[MixedEquilibrium]:
    """Solve both indifference conditions; None when no interior solution.

    Alice mixes her first strategy with probability p, Bob his with q.
    q makes Alice indifferent between her rows, p makes Bob indifferent
    between his columns; a solution only counts when both land in [0, 1].
    """
    a = game.payoffs_a
    b = game.payoffs_b
    denom_q = (a[0] - a[2]) + (a[3] - a[1])
    denom_p = (b[0] - b[1]) + (b[3] - b[2])
    if abs(denom_q) < 1e-12 or abs(denom_p) < 1e-12:
        return None
    q = (a[3] - a[1]) / denom_q
    p = (b[3] - b[2]) / denom_p
    if not (0.0 <= p <= 1.0 and 0.0 <= q <= 1.0):
        return None
    alice = a[0] * q + a[1] * (1 - q)
    bob = b[0] * p + b[2] * (1 - p)
    return MixedEquilibrium(p, q, PayoffPair(alice, bob))


def pareto_front(game: GameSpec) -> list[tuple[int, int]]:
    """Cells not strictly dominated in both players' payoffs by another cell."""
    cells = list(itertools.product(range(2), range(2)))
    front = []
    for j, l in cells:
        n = 2 * j + l
        dominated = any(
            game.payoffs_a[2 * jj + ll] > game.payoffs_a[n]
            and game.payoffs_b[2 * jj + ll] > game.payoffs_b[n]
            for jj, ll in cells
            if (jj, ll) != (j, l)
        )
        if not dominated:
            front.append((j, l))
    return front


@dataclass(frozen=True)
class ClassicalAnalysis:
    pure_ne: tuple[tuple[int, int], ...]
    mixed_ne: Optional[MixedEquilibrium]
    pareto_optimal: tuple[tuple[int, int], ...]


def classical_analysis(game: GameSpec) -> ClassicalAnalysis:
    return ClassicalAnalysis(
        pure_ne=tuple(pure_nash(game)),
        mixed_ne=mixed_nash_2x2(game),
        pareto_optimal=tuple(pareto_front(game)),
    )
