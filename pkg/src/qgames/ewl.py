"""The quantized 2x2 game protocol.

A referee prepares a two-qubit input state, both players act locally with a
two-parameter special-unitary strategy, the referee undoes the preparation
and measures in the computational basis. The four outcome probabilities
P00, P01, P10, P11 (outcome n = 2j + l, j = Alice's bit, l = Bob's bit)
feed the payoff tables of the game catalog.

Three kinds of shared correlation are supported:

* ``Correlation.QUANTUM``  - the maximally entangled state J|fg>.
* ``Correlation.CLASSICAL`` - the same state fully dephased in the joint
  computational basis, i.e. for |00> the mixture (|00><00| + |11><11|)/2.
* ``Correlation.NONE``     - the bare product state |fg>, as an
  uncorrelated baseline run through the identical protocol.

For the |00> input there are closed-form outcome probabilities for both the
quantum and the classical case; ``play`` is the independent density-matrix
simulation they are checked against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from . import qcore

THETA_MAX = math.pi
PHI_MAX = math.pi / 2


class Correlation(Enum):
    """Kind of correlation shared through the referee's input state."""

    QUANTUM = "quantum"
    CLASSICAL = "classical"
    NONE = "none"


@dataclass(frozen=True)
class StrategyParams:
    """One player's strategy point (theta, phi), theta in [0, pi], phi in [0, pi/2]."""

    theta: float
    phi: float

    def __post_init__(self):
        if not 0.0 <= self.theta <= THETA_MAX:
            raise ValueError(f"theta {self.theta} outside [0, pi]")
        if not 0.0 <= self.phi <= PHI_MAX:
            raise ValueError(f"phi {self.phi} outside [0, pi/2]")


#: Identity strategy (first classical move).
IDENTITY = StrategyParams(0.0, 0.0)
#: Bit flip i*sigma_y (second classical move).
BIT_FLIP = StrategyParams(math.pi, 0.0)
#: Phase flip i*sigma_z (the purely quantum move that resolves several dilemmas).
PHASE_FLIP = StrategyParams(0.0, math.pi / 2)

NAMED_STRATEGIES = {
    "id": IDENTITY,
    "s0": IDENTITY,
    "isy": BIT_FLIP,
    "isz": PHASE_FLIP,
}


class OutcomeDistribution(NamedTuple):
    """Referee measurement probabilities for outcomes 00, 01, 10, 11."""

    p00: float
    p01: float
    p10: float
    p11: float

    def as_array(self) -> np.ndarray:
        return np.array(self, dtype=float)


def named_strategy(token: str) -> StrategyParams:
    """Resolve a strategy alias such as ``id``, ``isy`` or ``isz``."""
    try:
        return NAMED_STRATEGIES[token.lower()]
    except KeyError:
        raise ValueError(f"unknown strategy alias {token!r}") from None


def strategy_unitary(s: StrategyParams) -> np.ndarray:
    """2x2 special unitary for a strategy point.

    U(0, 0) is the identity, U(pi, 0) the bit flip i*sigma_y and
    U(0, pi/2) the phase flip i*sigma_z; the determinant is one for all
    parameters.
    """
    c = math.cos(s.theta / 2)
    d = math.sin(s.theta / 2)
    e_plus = complex(math.cos(s.phi), math.sin(s.phi))
    return np.array([[e_plus * c, d], [-d, e_plus.conjugate() * c]], dtype=complex)


def _check_bits(bits) -> tuple[int, int]:
    f, g = bits
    if f not in (0, 1) or g not in (0, 1):
        raise ValueError(f"input bits must be 0 or 1, got {bits!r}")
    return int(f), int(g)


def entangler(bits=(0, 0)) -> np.ndarray:
    """Maximally entangled state J|f>|g> = (|fg> + i(-1)^(f+g)|1-f,1-g>)/sqrt(2)."""
    f, g = _check_bits(bits)
    state = np.zeros(4, dtype=complex)
    state[2 * f + g] = 1.0 / math.sqrt(2)
    state[2 * (1 - f) + (1 - g)] = 1j * (-1.0) ** (f + g) / math.sqrt(2)
    return state


@lru_cache(maxsize=1)
def entangler_matrix() -> np.ndarray:
    """The 4x4 entangling operator J, assembled column-wise from all inputs."""
    j = np.zeros((4, 4), dtype=complex)
    for f in (0, 1):
        for g in (0, 1):
            j[:, 2 * f + g] = entangler((f, g))
    j.setflags(write=False)
    return j


def prepare_input(kind: Correlation, bits=(0, 0)) -> np.ndarray:
    """Referee's input state for the requested correlation kind."""
    f, g = _check_bits(bits)
    if kind is Correlation.QUANTUM:
        return qcore.pure_density(entangler((f, g)))
    if kind is Correlation.CLASSICAL:
        return qcore.dephase(qcore.pure_density(entangler((f, g))), 1.0)
    if kind is Correlation.NONE:
        return qcore.pure_density(qcore.basis_state(4, 2 * f + g))
    raise ValueError(f"unknown correlation kind {kind!r}")


def play(rho_in: np.ndarray, sa: StrategyParams, sb: StrategyParams) -> OutcomeDistribution:
    """Run the full protocol on an explicit 4x4 input state.

    Applies U_A (x) U_B, undoes the entangler and measures: the direct
    density-matrix simulation used as the oracle for the closed forms.
    """
    rho_in = np.asarray(rho_in, dtype=complex)
    if rho_in.shape != (4, 4) or not qcore.is_density_matrix(rho_in):
        raise ValueError("input is not a valid 4x4 density matrix")
    local = qcore.tensor(strategy_unitary(sa), strategy_unitary(sb))
    rho_out = qcore.evolve(rho_in, local)
    rho_final = qcore.evolve(rho_out, entangler_matrix().conj().T)
    return OutcomeDistribution(*(qcore.basis_probability(rho_final, n) for n in range(4)))


def closed_form_qc(sa: StrategyParams, sb: StrategyParams) -> OutcomeDistribution:
    """Closed-form outcome probabilities for the entangled |00> input."""
    ca, da = math.cos(sa.theta / 2), math.sin(sa.theta / 2)
    cb, db = math.cos(sb.theta / 2), math.sin(sb.theta / 2)
    x = da * cb
    y = ca * db
    total = sa.phi + sb.phi
    p00 = (ca * cb * math.cos(total)) ** 2
    p01 = (x * math.sin(sb.phi) - y * math.cos(sa.phi)) ** 2
    p10 = (x * math.cos(sb.phi) - y * math.sin(sa.phi)) ** 2
    p11 = (da * db + ca * cb * math.sin(total)) ** 2
    return OutcomeDistribution(p00, p01, p10, p11)


def closed_form_cc(sa: StrategyParams, sb: StrategyParams) -> OutcomeDistribution:
    """Closed-form outcome probabilities for the dephased (classical) input."""
    ca, na = math.cos(sa.theta), math.sin(sa.theta)
    cb, nb = math.cos(sb.theta), math.sin(sb.theta)
    cc = ca * cb
    ss = na * nb
    s_sum = math.sin(sa.phi + sb.phi)
    s_diff = math.sin(sa.phi - sb.phi)
    p00 = (1 + cc - ss * s_sum) / 4
    p01 = (1 - cc + ss * s_diff) / 4
    p10 = (1 - cc - ss * s_diff) / 4
    p11 = (1 + cc + ss * s_sum) / 4
    return OutcomeDistribution(p00, p01, p10, p11)


def distribution(
    kind: Correlation,
    sa: StrategyParams,
    sb: StrategyParams,
    bits=(0, 0),
) -> OutcomeDistribution:
    """Outcome distribution, taking the closed form where one applies.

    The fast closed forms cover the quantum |00> input and the classical
    mixture obtained from |00> or |11> (they dephase to the same state);
    every other combination runs the density-matrix simulation.
    """
    f, g = _check_bits(bits)
    if kind is Correlation.QUANTUM and (f, g) == (0, 0):
        return closed_form_qc(sa, sb)
    if kind is Correlation.CLASSICAL and f == g:
        return closed_form_cc(sa, sb)
    return play(prepare_input(kind, (f, g)), sa, sb)
