"""Continuous-strategy equilibrium machinery over the (theta, phi) space.

The strategy space of each player is discretized on a uniform grid, payoffs
are evaluated in closed form (quantum / classical correlation) or by direct
simulation (uncorrelated input), and approximate equilibria are found by
comparing each profile against both players' refined best responses.
Refinement is derivative-free coordinate descent with step halving, so no
analytic gradients enter anywhere.

Everything is deterministic: grid evaluation order is fixed, argmax ties
break toward the smallest theta and then the smallest phi, and component
output is sorted, so identical inputs give byte-identical reports.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterator, NamedTuple, Optional

import numpy as np

from . import ewl
from .catalog import GameSpec, PayoffPair, expected_payoffs
from .ewl import Correlation, StrategyParams

#: Default per-player grid: 65 theta points on [0, pi], 33 phi points on [0, pi/2].
DEFAULT_THETA_COUNT = 65
DEFAULT_PHI_COUNT = 33
#: Epsilon used when verifying claimed equilibria.
CLAIM_EPSILON = 1e-3
#: Coarser epsilon used when asserting that no equilibrium exists.
NO_NE_EPSILON = 0.05
#: Coordinate-descent step is halved from the grid spacing down to this size.
REFINE_TOL = 1e-6


@dataclass(frozen=True)
class StrategyGrid:
    """Uniform discretization of one player's strategy rectangle."""

    theta_count: int = DEFAULT_THETA_COUNT
    phi_count: int = DEFAULT_PHI_COUNT

    def __post_init__(self):
        if self.theta_count < 2 or self.phi_count < 2:
            raise ValueError("grid needs at least two points per axis")

    @property
    def size(self) -> int:
        return self.theta_count * self.phi_count

    def thetas(self) -> np.ndarray:
        return np.linspace(0.0, math.pi, self.theta_count)

    def phis(self) -> np.ndarray:
        return np.linspace(0.0, math.pi / 2, self.phi_count)

    def theta_step(self) -> float:
        return math.pi / (self.theta_count - 1)

    def phi_step(self) -> float:
        return (math.pi / 2) / (self.phi_count - 1)

    def params(self, flat_index: int) -> StrategyParams:
        it, ip = divmod(flat_index, self.phi_count)
        return StrategyParams(self.thetas()[it], self.phis()[ip])


@dataclass(frozen=True)
class Profile:
    """A joint strategy profile (Alice, Bob)."""

    a: StrategyParams
    b: StrategyParams

    def swapped(self) -> "Profile":
        return Profile(self.b, self.a)


def _probability_vectors(kind: Correlation, ta, pa, tb, pb):
    """Vectorized outcome probabilities; accepts scalars or numpy arrays."""
    if kind is Correlation.QUANTUM:
        ca, da = np.cos(ta / 2), np.sin(ta / 2)
        cb, db = np.cos(tb / 2), np.sin(tb / 2)
        x = da * cb
        y = ca * db
        total = pa + pb
        p00 = (ca * cb * np.cos(total)) ** 2
        p01 = (x * np.sin(pb) - y * np.cos(pa)) ** 2
        p10 = (x * np.cos(pb) - y * np.sin(pa)) ** 2
        p11 = (da * db + ca * cb * np.sin(total)) ** 2
        return p00, p01, p10, p11
    if kind is Correlation.CLASSICAL:
        cc = np.cos(ta) * np.cos(tb)
        ss = np.sin(ta) * np.sin(tb)
        s_sum = np.sin(pa + pb)
        s_diff = np.sin(pa - pb)
        p00 = (1 + cc - ss * s_sum) / 4
        p01 = (1 - cc + ss * s_diff) / 4
        p10 = (1 - cc - ss * s_diff) / 4
        p11 = (1 + cc + ss * s_sum) / 4
        return p00, p01, p10, p11
    raise ValueError(f"no vectorized probabilities for correlation kind {kind!r}")


def payoff_function(game: GameSpec, kind: Correlation) -> Callable[[float, float, float, float], tuple[float, float]]:
    """Scalar payoff evaluator (thetaA, phiA, thetaB, phiB) -> (alice, bob).

    The quantum and classical kinds use the closed forms through plain math
    calls, which keeps the refinement loops cheap; the uncorrelated kind
    falls back to the density-matrix simulation.
    """
    a0, a1, a2, a3 = game.payoffs_a
    b0, b1, b2, b3 = game.payoffs_b

    if kind is Correlation.QUANTUM:

        def pair(ta, pa, tb, pb):
            ca, da = math.cos(ta / 2), math.sin(ta / 2)
            cb, db = math.cos(tb / 2), math.sin(tb / 2)
            x = da * cb
            y = ca * db
            total = pa + pb
            p00 = (ca * cb * math.cos(total)) ** 2
            p01 = (x * math.sin(pb) - y * math.cos(pa)) ** 2
            p10 = (x * math.cos(pb) - y * math.sin(pa)) ** 2
            p11 = (da * db + ca * cb * math.sin(total)) ** 2
            return (
                a0 * p00 + a1 * p01 + a2 * p10 + a3 * p11,
                b0 * p00 + b1 * p01 + b2 * p10 + b3 * p11,
            )

    elif kind is Correlation.CLASSICAL:

        def pair(ta, pa, tb, pb):
            cc = math.cos(ta) * math.cos(tb)
            ss = math.sin(ta) * math.sin(tb)
            s_sum = math.sin(pa + pb)
            s_diff = math.sin(pa - pb)
            p00 = (1 + cc - ss * s_sum) / 4
            p01 = (1 - cc + ss * s_diff) / 4
            p10 = (1 - cc - ss * s_diff) / 4
            p11 = (1 + cc + ss * s_sum) / 4
            return (
                a0 * p00 + a1 * p01 + a2 * p10 + a3 * p11,
                b0 * p00 + b1 * p01 + b2 * p10 + b3 * p11,
            )

    else:

        def pair(ta, pa, tb, pb):
            dist = ewl.play(
                ewl.prepare_input(kind),
                StrategyParams(ta, pa),
                StrategyParams(tb, pb),
            )
            payoffs = expected_payoffs(game, dist)
            return (payoffs.alice, payoffs.bob)

    return pair


def payoff_profile(game: GameSpec, kind: Correlation, profile: Profile) -> PayoffPair:
    """Payoffs of one profile under the given correlation kind."""
    alice, bob = payoff_function(game, kind)(
        profile.a.theta, profile.a.phi, profile.b.theta, profile.b.phi
    )
    return PayoffPair(alice, bob)


def payoff_tables(game: GameSpec, kind: Correlation, grid: StrategyGrid) -> tuple[np.ndarray, np.ndarray]:
    """Dense payoff matrices (alice, bob) over grid strategy indices.

    Row index is Alice's flattened strategy (theta-major), column index is
    Bob's. Quantum/classical kinds are evaluated vectorized; the
    uncorrelated kind loops over the simulation.
    """
    thetas = np.repeat(grid.thetas(), grid.phi_count)
    phis = np.tile(grid.phis(), grid.theta_count)
    if kind in (Correlation.QUANTUM, Correlation.CLASSICAL):
        ta, pa = thetas[:, None], phis[:, None]
        tb, pb = thetas[None, :], phis[None, :]
        p00, p01, p10, p11 = _probability_vectors(kind, ta, pa, tb, pb)
        a = game.payoffs_a
        b = game.payoffs_b
        table_a = a[0] * p00 + a[1] * p01 + a[2] * p10 + a[3] * p11
        table_b = b[0] * p00 + b[1] * p01 + b[2] * p10 + b[3] * p11
        return table_a, table_b
    pair = payoff_function(game, kind)
    size = grid.size
    table_a = np.empty((size, size))
    table_b = np.empty((size, size))
    for i in range(size):
        for j in range(size):
            table_a[i, j], table_b[i, j] = pair(thetas[i], phis[i], thetas[j], phis[j])
    return table_a, table_b


@dataclass(frozen=True)
class LandscapeTable:
    """Exhaustive payoff evaluation over all grid profiles."""

    game: GameSpec
    kind: Correlation
    grid: StrategyGrid
    alice: np.ndarray
    bob: np.ndarray

    @property
    def row_count(self) -> int:
        return self.grid.size ** 2

    def iter_rows(self) -> Iterator[tuple[float, float, float, float, float, float]]:
        """Yield (thetaA, phiA, thetaB, phiB, payoffA, payoffB) rows in grid order."""
        thetas = np.repeat(self.grid.thetas(), self.grid.phi_count)
        phis = np.tile(self.grid.phis(), self.grid.theta_count)
        size = self.grid.size
        for i in range(size):
            row_a = self.alice[i]
            row_b = self.bob[i]
            for j in range(size):
                yield (thetas[i], phis[i], thetas[j], phis[j], row_a[j], row_b[j])


def landscape(game: GameSpec, kind: Correlation, grid: StrategyGrid) -> LandscapeTable:
    """Evaluate payoffs for every profile on the grid."""
    table_a, table_b = payoff_tables(game, kind, grid)
    return LandscapeTable(game, kind, grid, table_a, table_b)


def _clamp(value: float, low: float, high: float) -> float:
    return low if value < low else high if value > high else value


def _refine(
    objective: Callable[[float, float], float],
    theta: float,
    phi: float,
    value: float,
    theta_step: float,
    phi_step: float,
    tol: float = REFINE_TOL,
) -> tuple[float, float, float]:
    """Coordinate descent with step halving from the grid spacing down to tol."""
    st, sp = theta_step, phi_step
    while st > tol or sp > tol:
        moved = False
        for dt, dp in ((st, 0.0), (-st, 0.0), (0.0, sp), (0.0, -sp)):
            for _ in range(64):
                tt = _clamp(theta + dt, 0.0, math.pi)
                pp = _clamp(phi + dp, 0.0, math.pi / 2)
                candidate = objective(tt, pp)
                if candidate > value:
                    theta, phi, value = tt, pp, candidate
                    moved = True
                else:
                    break
        if not moved:
            st, sp = st / 2, sp / 2
    return theta, phi, value


ALICE = "alice"
BOB = "bob"


def _responder_objective(
    game: GameSpec, kind: Correlation, opponent: StrategyParams, responder: str
) -> Callable[[float, float], float]:
    pair = payoff_function(game, kind)
    if responder == ALICE:
        return lambda t, p: pair(t, p, opponent.theta, opponent.phi)[0]
    if responder == BOB:
        return lambda t, p: pair(opponent.theta, opponent.phi, t, p)[1]
    raise ValueError(f"responder must be {ALICE!r} or {BOB!r}")


def _grid_argmax(values: np.ndarray, grid: StrategyGrid) -> tuple[int, float, float]:
    # np.argmax takes the first maximum, which in theta-major order is the
    # smallest theta and then the smallest phi: the deterministic tie-break.
    flat = int(np.argmax(values))
    it, ip = divmod(flat, grid.phi_count)
    return flat, grid.thetas()[it], grid.phis()[ip]


def best_response(
    game: GameSpec,
    kind: Correlation,
    opponent: StrategyParams,
    responder: str,
    grid: StrategyGrid,
) -> tuple[StrategyParams, float]:
    """Best reply of one player against a fixed opponent strategy.

    Grid search picks the starting cell, coordinate descent refines it to
    REFINE_TOL. Returns the refined strategy and its payoff value.
    """
    objective = _responder_objective(game, kind, opponent, responder)
    values = _responder_grid_values(game, kind, opponent, responder, grid)
    _, theta, phi = _grid_argmax(values, grid)
    theta, phi, value = _refine(
        objective, theta, phi, float(values.max()), grid.theta_step(), grid.phi_step()
    )
    return StrategyParams(theta, phi), value


def _responder_grid_values(
    game: GameSpec, kind: Correlation, opponent: StrategyParams, responder: str, grid: StrategyGrid
) -> np.ndarray:
    """Vector of the responder's payoffs over their own grid strategies."""
    thetas = np.repeat(grid.thetas(), grid.phi_count)
    phis = np.tile(grid.phis(), grid.theta_count)
    if kind in (Correlation.QUANTUM, Correlation.CLASSICAL):
        if responder == ALICE:
            p00, p01, p10, p11 = _probability_vectors(
                kind, thetas, phis, opponent.theta, opponent.phi
            )
            coeff = game.payoffs_a
        else:
            p00, p01, p10, p11 = _probability_vectors(
                kind, opponent.theta, opponent.phi, thetas, phis
            )
            coeff = game.payoffs_b
        return coeff[0] * p00 + coeff[1] * p01 + coeff[2] * p10 + coeff[3] * p11
    objective = _responder_objective(game, kind, opponent, responder)
    return np.array([objective(t, p) for t, p in zip(thetas, phis)])


def _refined_best_values(
    game: GameSpec,
    kind: Correlation,
    grid: StrategyGrid,
    table_a: np.ndarray,
    table_b: np.ndarray,
) -> tuple[np.ndarray, np.ndarray]:
    """Refined best-response value for each player against every grid strategy."""
    pair = payoff_function(game, kind)
    thetas = grid.thetas()
    phis = grid.phis()
    ht, hp = grid.theta_step(), grid.phi_step()
    size = grid.size

    best_a = np.empty(size)
    col_start = table_a.argmax(axis=0)
    for j in range(size):
        jt, jp = divmod(j, grid.phi_count)
        tb, pb = thetas[jt], phis[jp]
        flat = int(col_start[j])
        it, ip = divmod(flat, grid.phi_count)
        objective = lambda t, p: pair(t, p, tb, pb)[0]
        _, _, best_a[j] = _refine(
            objective, thetas[it], phis[ip], float(table_a[flat, j]), ht, hp
        )

    best_b = np.empty(size)
    row_start = table_b.argmax(axis=1)
    for i in range(size):
        it, ip = divmod(i, grid.phi_count)
        ta, pa = thetas[it], phis[ip]
        flat = int(row_start[i])
        jt, jp = divmod(flat, grid.phi_count)
        objective = lambda t, p: pair(ta, pa, t, p)[1]
        _, _, best_b[i] = _refine(
            objective, thetas[jt], phis[jp], float(table_b[i, flat]), ht, hp
        )
    return best_a, best_b


@dataclass(frozen=True)
class NEComponent:
    """A connected set of grid profiles that all pass the epsilon-NE test.

    ``member_indices`` holds (i_thetaA, i_phiA, i_thetaB, i_phiB) grid index
    tuples. The representative is the member with the smallest unilateral
    gain (ties break lexicographically). The geometry label is a heuristic
    based on member count and extent at the recorded resolution: a tiny
    cluster is a point, anything that scales like one grid axis or two is a
    curve-like family, and only components that fill a volume of the
    profile space are regions.
    """

    member_indices: tuple[tuple[int, int, int, int], ...]
    representative: Profile
    representative_payoffs: PayoffPair
    payoff_min: PayoffPair
    payoff_max: PayoffPair
    geometry: str
    max_unilateral_gain: float
    focal: bool
    theta_count: int
    phi_count: int
    epsilon: float

    @property
    def member_count(self) -> int:
        return len(self.member_indices)

    def members(self, grid: StrategyGrid) -> Iterator[Profile]:
        thetas = grid.thetas()
        phis = grid.phis()
        for ia_t, ia_p, ib_t, ib_p in self.member_indices:
            yield Profile(
                StrategyParams(thetas[ia_t], phis[ia_p]),
                StrategyParams(thetas[ib_t], phis[ib_p]),
            )

    def contains_profile_indices(self, indices: tuple[int, int, int, int]) -> bool:
        return indices in set(self.member_indices)

    def to_json_dict(self) -> dict:
        return {
            "representative": {
                "theta_a": self.representative.a.theta,
                "phi_a": self.representative.a.phi,
                "theta_b": self.representative.b.theta,
                "phi_b": self.representative.b.phi,
            },
            "payoffs": [self.representative_payoffs.alice, self.representative_payoffs.bob],
            "payoff_min": [self.payoff_min.alice, self.payoff_min.bob],
            "payoff_max": [self.payoff_max.alice, self.payoff_max.bob],
            "geometry": self.geometry,
            "max_unilateral_gain": self.max_unilateral_gain,
            "member_count": self.member_count,
            "focal": self.focal,
        }


def _classify_geometry(cells: list[tuple[int, int, int, int]], grid: StrategyGrid) -> str:
    count = len(cells)
    arr = np.array(cells)
    extents = arr.max(axis=0) - arr.min(axis=0) + 1
    if count <= 9 and extents.max() <= 3:
        return "point"
    if count <= 4 * grid.size:
        return "curve"
    return "region"


def _connected_components(cells: set[tuple[int, int, int, int]]):
    remaining = set(cells)
    while remaining:
        seed = remaining.pop()
        stack = [seed]
        component = [seed]
        while stack:
            cell = stack.pop()
            for axis in range(4):
                for step in (-1, 1):
                    neighbor = list(cell)
                    neighbor[axis] += step
                    neighbor = tuple(neighbor)
                    if neighbor in remaining:
                        remaining.remove(neighbor)
                        stack.append(neighbor)
                        component.append(neighbor)
        yield component


def epsilon_ne_scan(
    game: GameSpec,
    kind: Correlation,
    grid: Optional[StrategyGrid] = None,
    epsilon: float = CLAIM_EPSILON,
) -> list[NEComponent]:
    """Find all grid profiles whose unilateral gains stay within epsilon.

    A profile qualifies when neither player's refined best response improves
    that player's payoff by more than epsilon. Qualifying profiles are
    grouped into connected components under single-step grid adjacency in
    the four (theta, phi) indices.
    """
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    grid = grid or StrategyGrid()
    table_a, table_b = payoff_tables(game, kind, grid)
    best_a, best_b = _refined_best_values(game, kind, grid, table_a, table_b)
    gain_a = best_a[None, :] - table_a
    gain_b = best_b[:, None] - table_b
    mask = (gain_a <= epsilon) & (gain_b <= epsilon)

    pc = grid.phi_count
    cells = {
        (i // pc, i % pc, j // pc, j % pc)
        for i, j in np.argwhere(mask)
    }

    thetas = grid.thetas()
    phis = grid.phis()
    components: list[NEComponent] = []
    for raw in _connected_components(cells):
        raw.sort()
        gains = []
        payoffs = []
        for ia_t, ia_p, ib_t, ib_p in raw:
            i = ia_t * pc + ia_p
            j = ib_t * pc + ib_p
            gains.append(max(gain_a[i, j], gain_b[i, j]))
            payoffs.append((table_a[i, j], table_b[i, j]))
        best_member = min(range(len(raw)), key=lambda k: (gains[k], raw[k]))
        ia_t, ia_p, ib_t, ib_p = raw[best_member]
        representative = Profile(
            StrategyParams(thetas[ia_t], phis[ia_p]),
            StrategyParams(thetas[ib_t], phis[ib_p]),
        )
        pay = np.array(payoffs)
        corner_thetas = (0, grid.theta_count - 1)
        focal = any(
            c[0] in corner_thetas and c[2] in corner_thetas and c[1] == 0 and c[3] == 0
            for c in raw
        )
        components.append(
            NEComponent(
                member_indices=tuple(raw),
                representative=representative,
                representative_payoffs=PayoffPair(*payoffs[best_member]),
                payoff_min=PayoffPair(*pay.min(axis=0)),
                payoff_max=PayoffPair(*pay.max(axis=0)),
                geometry=_classify_geometry(raw, grid),
                max_unilateral_gain=float(max(gains)),
                focal=focal,
                theta_count=grid.theta_count,
                phi_count=grid.phi_count,
                epsilon=epsilon,
            )
        )
    components.sort(key=lambda comp: comp.member_indices[0])
    return components


class CandidateCheck(NamedTuple):
    """Result of testing one profile for the epsilon-NE property."""

    is_ne: bool
    max_unilateral_gain: float
    payoffs: PayoffPair


def verify_candidate(
    game: GameSpec,
    kind: Correlation,
    profile: Profile,
    epsilon: float = CLAIM_EPSILON,
    grid: Optional[StrategyGrid] = None,
) -> CandidateCheck:
    """Directly check a (possibly off-grid) profile against refined deviations."""
    grid = grid or StrategyGrid()
    current = payoff_profile(game, kind, profile)
    _, best_alice = best_response(game, kind, profile.b, ALICE, grid)
    _, best_bob = best_response(game, kind, profile.a, BOB, grid)
    gain = max(best_alice - current.alice, best_bob - current.bob)
    return CandidateCheck(gain <= epsilon, float(gain), current)


class MinimaxResult(NamedTuple):
    maximin: float
    minimax: float
    gap: float


def minimax(game: GameSpec, kind: Correlation, grid: Optional[StrategyGrid] = None) -> MinimaxResult:
    """Security levels of a zero-sum game over the grid.

    maximin: best payoff Alice can guarantee against Bob's refined reply;
    minimax: the least Alice's refined reply achieves over Bob's strategies.
    The gap is ~0 exactly when the scanned space contains an equilibrium.
    """
    if not game.zero_sum:
        raise ValueError(f"{game.name} is not zero-sum")
    grid = grid or StrategyGrid()
    table_a, table_b = payoff_tables(game, kind, grid)
    best_a, best_b = _refined_best_values(game, kind, grid, table_a, table_b)
    # Zero-sum: Bob maximizing his payoff minimizes Alice's.
    maximin = float(np.max(-best_b))
    minimax_value = float(np.min(best_a))
    return MinimaxResult(maximin, minimax_value, minimax_value - maximin)


def scan_report(
    game: GameSpec,
    kind: Correlation,
    components: list[NEComponent],
    grid: StrategyGrid,
    epsilon: float,
) -> dict:
    """JSON-ready description of a scan result."""
    return {
        "game": game.name,
        "correlation": kind.value,
        "grid": [grid.theta_count, grid.phi_count],
        "epsilon": epsilon,
        "component_count": len(components),
        "components": [comp.to_json_dict() for comp in components],
    }
