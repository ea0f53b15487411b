"""Quantized 2x2 strategic games and the three-qutrit door game.

The package compares how shared quantum correlation (a maximally entangled
referee state) and shared classical correlation (the same state after full
dephasing) change the equilibrium structure of six standard 2x2 games, and
runs the same comparison for a quantum Monty Hall game on three qutrits.
"""

from .catalog import (
    GAME_NAMES,
    ClassicalAnalysis,
    GameSpec,
    MixedEquilibrium,
    PayoffPair,
    builtin,
    classical_analysis,
    expected_payoffs,
    load_game,
    mixed_nash_2x2,
    pareto_front,
    pure_nash,
    validate,
)
from .equilibria import (
    CLAIM_EPSILON,
    NO_NE_EPSILON,
    CandidateCheck,
    LandscapeTable,
    MinimaxResult,
    NEComponent,
    Profile,
    StrategyGrid,
    best_response,
    epsilon_ne_scan,
    landscape,
    minimax,
    payoff_profile,
    verify_candidate,
)
from .ewl import (
    BIT_FLIP,
    IDENTITY,
    PHASE_FLIP,
    Correlation,
    OutcomeDistribution,
    StrategyParams,
    closed_form_cc,
    closed_form_qc,
    distribution,
    entangler,
    entangler_matrix,
    named_strategy,
    play,
    prepare_input,
    strategy_unitary,
)
from .monty import (
    InitialState,
    MontyConfig,
    MontyResult,
    bob_payoff_closed_form,
    fair_strategy,
    open_operator,
    play_monty,
    switch_operator,
)

__version__ = "0.1.0"

__all__ = [
    "BIT_FLIP",
    "CLAIM_EPSILON",
    "CandidateCheck",
    "ClassicalAnalysis",
    "Correlation",
    "GAME_NAMES",
    "GameSpec",
    "IDENTITY",
    "InitialState",
    "LandscapeTable",
    "MinimaxResult",
    "MixedEquilibrium",
    "MontyConfig",
    "MontyResult",
    "NEComponent",
    "NO_NE_EPSILON",
    "OutcomeDistribution",
    "PayoffPair",
    "PHASE_FLIP",
    "Profile",
    "StrategyGrid",
    "StrategyParams",
    "best_response",
    "bob_payoff_closed_form",
    "builtin",
    "classical_analysis",
    "closed_form_cc",
    "closed_form_qc",
    "distribution",
    "entangler",
    "entangler_matrix",
    "epsilon_ne_scan",
    "expected_payoffs",
    "fair_strategy",
    "landscape",
    "load_game",
    "minimax",
    "mixed_nash_2x2",
    "named_strategy",
    "open_operator",
    "pareto_front",
    "payoff_profile",
    "play",
    "play_monty",
    "prepare_input",
    "pure_nash",
    "strategy_unitary",
    "switch_operator",
    "validate",
    "verify_candidate",
]
