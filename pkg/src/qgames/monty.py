"""Three-door Monty Hall on three qutrits.

The joint register is |o>|b>|a> with basis index 9o + 3b + a: ``a`` is the
prize door chosen by the host (Alice), ``b`` the contestant's (Bob's) pick
and ``o`` the door opened by the host. Both players may act with arbitrary
3x3 unitaries on their own registers before the host opens a door; Bob then
either switches to the remaining closed door or stays, mixed by the angle
``gamma`` (gamma = 0: always switch, gamma = pi/2: always stay). Bob wins
when his register agrees with the prize register.

The switch/stay alternatives are combined as an incoherent channel

    rho -> cos(gamma)^2 S rho S^dag + sin(gamma)^2 rho,

i.e. the referee flips a biased coin between the two unitary branches. A
coherent superposition of the branches would interfere on the winning
states (the cross terms scale with Re sum_m conj(a_mm) sum_{n!=m} a_mn) and
would break both the closed-form payoff and the equivalence between the
entangled and the dephased initial state that this module exists to
demonstrate; the incoherent mixture reproduces both to machine precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

import numpy as np

from . import qcore

DOORS = 3
DIM = DOORS ** 3


def register_index(opened: int, pick: int, prize: int) -> int:
    """Flat basis index of |opened, pick, prize>."""
    return 9 * opened + 3 * pick + prize


class InitialState(Enum):
    """How the prize and pick registers are correlated at the start."""

    ENTANGLED = "entangled"
    CLASSICAL = "cc"
    UNCORRELATED = "uncorrelated"


@lru_cache(maxsize=1)
def open_operator() -> np.ndarray:
    """Unitary that opens a door, defined by its action on unopened states.

    On |0, b, a> with b != a it deterministically opens the single door that
    is neither picked nor winning; with b == a it opens an equal
    superposition of the two non-winning doors. The action on the nine
    reachable states is an isometry, completed to a 27x27 unitary by
    Gram-Schmidt against the remaining basis vectors.
    """
    columns = np.zeros((DIM, DOORS * DOORS), dtype=complex)
    indices = []
    for pick in range(DOORS):
        for prize in range(DOORS):
            src = register_index(0, pick, prize)
            indices.append(src)
            col = columns[:, len(indices) - 1]
            if pick != prize:
                opened = 3 - pick - prize
                col[register_index(opened, pick, prize)] = 1.0
            else:
                first, second = sorted(set(range(DOORS)) - {prize})
                col[register_index(first, pick, prize)] = 1.0 / math.sqrt(2)
                col[register_index(second, pick, prize)] = 1.0 / math.sqrt(2)
    unitary = qcore.complete_to_unitary(columns, indices)
    unitary.setflags(write=False)
    return unitary


@lru_cache(maxsize=1)
def switch_operator() -> np.ndarray:
    """Permutation moving Bob's pick to the remaining closed door.

    On |o, b, a> with o != b the pick becomes the unique door outside
    {o, b}; states with o == b (never produced by the opening step) are
    left alone. The operator is self-inverse on the o != b subspace.
    """
    permutation = np.zeros((DIM, DIM), dtype=complex)
    for opened in range(DOORS):
        for pick in range(DOORS):
            for prize in range(DOORS):
                src = register_index(opened, pick, prize)
                if opened != pick:
                    dst = register_index(opened, 3 - opened - pick, prize)
                else:
                    dst = src
                permutation[dst, src] = 1.0
    permutation.setflags(write=False)
    return permutation


def no_switch_operator() -> np.ndarray:
    """Bob keeps his pick: the identity."""
    return np.eye(DIM, dtype=complex)


def initial_density(kind: InitialState) -> np.ndarray:
    """Initial state: opened register |0>, prize/pick correlated as requested."""
    rho = np.zeros((DIM, DIM), dtype=complex)
    if kind is InitialState.ENTANGLED:
        psi = np.zeros(DIM, dtype=complex)
        for door in range(DOORS):
            psi[register_index(0, door, door)] = 1.0 / math.sqrt(3)
        return qcore.pure_density(psi)
    if kind is InitialState.CLASSICAL:
        for door in range(DOORS):
            rho[register_index(0, door, door), register_index(0, door, door)] = 1.0 / 3.0
        return rho
    if kind is InitialState.UNCORRELATED:
        for pick in range(DOORS):
            for prize in range(DOORS):
                idx = register_index(0, pick, prize)
                rho[idx, idx] = 1.0 / 9.0
        return rho
    raise ValueError(f"unknown initial state {kind!r}")


@dataclass(frozen=True)
class MontyConfig:
    """One run of the game: initial correlation, both operators, switch mix."""

    initial: InitialState
    alice: np.ndarray = field(default_factory=lambda: np.eye(3, dtype=complex))
    bob: np.ndarray = field(default_factory=lambda: np.eye(3, dtype=complex))
    gamma: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "alice", np.asarray(self.alice, dtype=complex))
        object.__setattr__(self, "bob", np.asarray(self.bob, dtype=complex))
        for label, op in (("alice", self.alice), ("bob", self.bob)):
            if op.shape != (3, 3) or not qcore.is_unitary(op):
                raise ValueError(f"{label} operator must be a 3x3 unitary")
        if not 0.0 <= self.gamma <= math.pi / 2:
            raise ValueError(f"gamma {self.gamma} outside [0, pi/2]")


@dataclass(frozen=True)
class MontyResult:
    """Bob's winning probability plus the final basis-state weights."""

    bob_win_probability: float
    branch_weights: np.ndarray

    def weight(self, opened: int, pick: int, prize: int) -> float:
        return float(self.branch_weights[register_index(opened, pick, prize)])


def play_monty(config: MontyConfig) -> MontyResult:
    """Run the full door game on density matrices.

    Local operators act first (identity on the opened register), the host
    opens a door, then the switch/stay mixture is applied incoherently with
    weights cos(gamma)^2 / sin(gamma)^2. Bob wins on every basis state
    whose pick register equals the prize register.
    """
    rho = initial_density(config.initial)
    local = qcore.tensor(np.eye(3, dtype=complex), qcore.tensor(config.bob, config.alice))
    rho = qcore.evolve(rho, local)
    rho = qcore.evolve(rho, open_operator())
    switch = switch_operator()
    cos_w = math.cos(config.gamma) ** 2
    sin_w = math.sin(config.gamma) ** 2
    rho = cos_w * (switch @ rho @ switch.conj().T) + sin_w * rho

    weights = np.clip(np.real(np.diag(rho)), 0.0, 1.0)
    win = sum(
        weights[register_index(opened, door, door)]
        for opened in range(DOORS)
        for door in range(DOORS)
    )
    return MontyResult(float(win), weights)


def bob_payoff_closed_form(alice: np.ndarray, gamma: float) -> float:
    """Bob's winning probability when he acts classically (identity).

    Valid for the entangled initial state (and, by the equivalence this
    package demonstrates, for the dephased one): the stay branch collects
    the squared diagonal of Alice's operator, the switch branch the squared
    off-diagonal weight, each divided by three.
    """
    a = np.asarray(alice, dtype=complex)
    if a.shape != (3, 3) or not qcore.is_unitary(a):
        raise ValueError("alice operator must be a 3x3 unitary")
    diag_weight = float(np.sum(np.abs(np.diag(a)) ** 2))
    off_weight = float(np.sum(np.abs(a) ** 2) - diag_weight)
    return (math.sin(gamma) ** 2 * diag_weight + math.cos(gamma) ** 2 * off_weight) / 3.0


def cyclic_permutation() -> np.ndarray:
    """The door relabeling 0 -> 1 -> 2 -> 0 (all diagonal entries zero)."""
    op = np.zeros((3, 3), dtype=complex)
    for door in range(DOORS):
        op[(door + 1) % DOORS, door] = 1.0
    return op


def fair_strategy() -> np.ndarray:
    """Host operator that pins Bob's winning probability to one half.

    A real rotation about the (1,1,1) axis whose angle puts every diagonal
    entry at 1/sqrt(2), so the diagonal weight is 3/2 and the closed form
    gives 1/2 regardless of gamma.
    """
    chi = math.acos((3.0 / math.sqrt(2) - 1.0) / 2.0)
    op = np.empty((3, 3), dtype=complex)
    for m in range(3):
        for n in range(3):
            op[m, n] = (1.0 + 2.0 * math.cos(chi + 2.0 * math.pi * ((m - n) % 3) / 3.0)) / 3.0
    return op
