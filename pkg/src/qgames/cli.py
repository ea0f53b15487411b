"""Command-line surface.

Subcommands: ``catalog``, ``analyze``, ``ne-scan``, ``sweep``, ``monty`` and
``verify-claims``. JSON is the machine format for reports (components nest),
CSV only for landscape sweeps (flat tables). All output is deterministic
for a fixed seed; angles are radians throughout.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Optional

import numpy as np

from . import claims, monty
from .catalog import (
    GAME_NAMES,
    GameSpec,
    builtin,
    classical_analysis,
    expected_payoffs,
    load_game,
    validate,
)
from .equilibria import (
    CLAIM_EPSILON,
    Profile,
    StrategyGrid,
    epsilon_ne_scan,
    landscape,
    scan_report,
)
from .ewl import Correlation, StrategyParams, distribution, named_strategy

_CORRELATIONS = {
    "qc": Correlation.QUANTUM,
    "cc": Correlation.CLASSICAL,
    "none": Correlation.NONE,
}

_INITIALS = {
    "entangled": monty.InitialState.ENTANGLED,
    "cc": monty.InitialState.CLASSICAL,
    "uncorrelated": monty.InitialState.UNCORRELATED,
}


def _parse_grid(text: str) -> StrategyGrid:
    try:
        theta_count, phi_count = (int(part) for part in text.lower().split("x"))
        return StrategyGrid(theta_count, phi_count)
    except (ValueError, TypeError):
        raise ValueError(f"grid must look like 65x33, got {text!r}") from None


def _parse_profile(text: str) -> Profile:
    tokens = [token.strip() for token in text.split(",")]
    if len(tokens) == 2:
        return Profile(named_strategy(tokens[0]), named_strategy(tokens[1]))
    if len(tokens) == 4:
        try:
            ta, pa, tb, pb = (float(token) for token in tokens)
        except ValueError:
            raise ValueError(f"profile angles must be numbers, got {text!r}") from None
        return Profile(StrategyParams(ta, pa), StrategyParams(tb, pb))
    raise ValueError("profile must be 'thetaA,phiA,thetaB,phiB' or two strategy aliases")


def _parse_bits(text: str) -> tuple[int, int]:
    if text not in ("00", "01", "10", "11"):
        raise ValueError(f"bits must be one of 00, 01, 10, 11, got {text!r}")
    return int(text[0]), int(text[1])


def _load_operator(spec: str) -> np.ndarray:
    named = {
        "id": np.eye(3, dtype=complex),
        "identity": np.eye(3, dtype=complex),
        "fair": monty.fair_strategy(),
        "cycle": monty.cyclic_permutation(),
    }
    if spec.lower() in named:
        return named[spec.lower()]
    with open(spec, "r", encoding="utf-8") as handle:
        rows = json.load(handle)
    op = np.array([[complex(entry[0], entry[1]) for entry in row] for row in rows])
    return op


def _resolve_game(args) -> GameSpec:
    if getattr(args, "game_file", None):
        return load_game(args.game_file)
    return builtin(args.game)


def _emit(args, text: str) -> None:
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _json_dumps(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True)


def _cell_names(game: GameSpec, cells) -> list[str]:
    return ["(" + ",".join(game.cell_label(j, l)) + ")" for j, l in cells]


def cmd_catalog(args) -> int:
    lines = []
    for name in GAME_NAMES:
        game = builtin(name)
        analysis = classical_analysis(game)
        report = validate(game)
        lines.append(f"{game.name}: labels {game.labels[0]} vs {game.labels[1]}")
        for n, key in enumerate(("00", "01", "10", "11")):
            pair = game.payoff_pair(n)
            lines.append(f"  outcome {key}: ({pair.alice:g}, {pair.bob:g})")
        flags = []
        if game.symmetric:
            flags.append("symmetric")
        if game.zero_sum:
            flags.append("zero-sum")
        if game.discoordination:
            flags.append("discoordination")
        lines.append(f"  flags: {', '.join(flags) if flags else 'none'}")
        for check in report.checks:
            lines.append(f"  constraint {check.name}: {'ok' if check.passed else 'VIOLATED'} ({check.detail})")
        if analysis.pure_ne:
            lines.append(f"  pure NE: {', '.join(_cell_names(game, analysis.pure_ne))}")
        else:
            lines.append("  pure NE: none")
        mixed = analysis.mixed_ne
        if mixed:
            lines.append(
                f"  mixed NE: p={mixed.p_alice:g}, q={mixed.q_bob:g} -> "
                f"({mixed.payoffs.alice:g}, {mixed.payoffs.bob:g})"
            )
            if name == "SD":
                lines.append(
                    "    note: the often-quoted 0.25 / -0.25 do not solve the indifference conditions"
                )
        else:
            lines.append("  mixed NE: none")
        lines.append(f"  Pareto optimal: {', '.join(_cell_names(game, analysis.pareto_optimal))}")
        lines.append("")
    _emit(args, "\n".join(lines))
    return 0


def cmd_analyze(args) -> int:
    game = _resolve_game(args)
    kind = _CORRELATIONS[args.correlation]
    profile = _parse_profile(args.profile)
    bits = _parse_bits(args.bits)
    dist = distribution(kind, profile.a, profile.b, bits)
    pay = expected_payoffs(game, dist)
    payload = {
        "game": game.name,
        "correlation": kind.value,
        "bits": f"{bits[0]}{bits[1]}",
        "profile": {
            "theta_a": profile.a.theta,
            "phi_a": profile.a.phi,
            "theta_b": profile.b.theta,
            "phi_b": profile.b.phi,
        },
        "distribution": {"p00": dist.p00, "p01": dist.p01, "p10": dist.p10, "p11": dist.p11},
        "payoffs": {"alice": pay.alice, "bob": pay.bob},
    }
    _emit(args, _json_dumps(payload))
    return 0


def cmd_ne_scan(args) -> int:
    game = _resolve_game(args)
    kind = _CORRELATIONS[args.correlation]
    grid = _parse_grid(args.grid)
    components = epsilon_ne_scan(game, kind, grid, args.epsilon)
    _emit(args, _json_dumps(scan_report(game, kind, components, grid, args.epsilon)))
    return 0


def cmd_sweep(args) -> int:
    game = _resolve_game(args)
    kind = _CORRELATIONS[args.correlation]
    grid = _parse_grid(args.grid)
    table = landscape(game, kind, grid)
    lines = ["thetaA,phiA,thetaB,phiB,payoffA,payoffB"]
    for row in table.iter_rows():
        lines.append(",".join(f"{value:.12g}" for value in row))
    _emit(args, "\n".join(lines) + "\n")
    return 0


def cmd_monty(args) -> int:
    if args.json:
        with open(args.json, "r", encoding="utf-8") as handle:
            payload = json.load(handle)
        initial = _INITIALS[payload["initial"]]
        gamma = float(payload.get("gamma", 0.0))
        alice = _matrix_from_json(payload.get("alice"))
        bob = _matrix_from_json(payload.get("bob"))
    else:
        initial = _INITIALS[args.initial]
        gamma = args.gamma
        alice = _load_operator(args.alice)
        bob = _load_operator(args.bob)
    config = monty.MontyConfig(initial, alice=alice, bob=bob, gamma=gamma)
    result = monty.play_monty(config)
    payload = {
        "initial": initial.value,
        "gamma": gamma,
        "bob_win": result.bob_win_probability,
        "branch_weights": {
            f"{o}{b}{a}": result.weight(o, b, a)
            for o in range(3)
            for b in range(3)
            for a in range(3)
            if result.weight(o, b, a) > 0.0
        },
    }
    if np.max(np.abs(config.bob - np.eye(3))) <= 1e-12:
        payload["closed_form"] = monty.bob_payoff_closed_form(config.alice, gamma)
    _emit(args, _json_dumps(payload))
    return 0


def _matrix_from_json(rows) -> np.ndarray:
    if rows is None:
        return np.eye(3, dtype=complex)
    return np.array([[complex(entry[0], entry[1]) for entry in row] for row in rows])


def cmd_verify_claims(args) -> int:
    overrides = None
    if args.game_file:
        game = load_game(args.game_file)
        overrides = {game.name: game}
    rows = claims.run_claims(seed=args.seed, games=overrides, rows=args.rows)
    lines = [f"{row.status:8} {row.key:26} {row.detail}" for row in rows]
    failed = claims.failures(rows)
    flagged = [row for row in rows if row.status == claims.FLAGGED]
    lines.append("")
    lines.append(
        f"{len(rows)} checks: {len(rows) - len(failed) - len(flagged)} passed, "
        f"{len(flagged)} flagged, {len(failed)} failed"
    )
    _emit(args, "\n".join(lines))
    return 1 if failed else 0


def _add_game_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("game", nargs="?", default="PD", help=f"one of {', '.join(GAME_NAMES)}")
    parser.add_argument("--game-file", help="path to a game description in JSON")
    parser.add_argument(
        "--correlation",
        choices=sorted(_CORRELATIONS),
        default="qc",
        help="shared correlation kind",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qgames",
        description="Quantized 2x2 strategic games, equilibrium scans and the qutrit door game.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_catalog = sub.add_parser("catalog", help="list the built-in games and their classical analysis")
    p_catalog.add_argument("--out", help="write output to a file instead of stdout")
    p_catalog.set_defaults(func=cmd_catalog)

    p_analyze = sub.add_parser("analyze", help="evaluate one strategy profile")
    _add_game_arguments(p_analyze)
    p_analyze.add_argument("--profile", required=True, help="thetaA,phiA,thetaB,phiB or e.g. isz,isz")
    p_analyze.add_argument("--bits", default="00", help="referee input bits (00, 01, 10, 11)")
    p_analyze.add_argument("--out")
    p_analyze.set_defaults(func=cmd_analyze)

    p_scan = sub.add_parser("ne-scan", help="scan the strategy grid for approximate equilibria")
    _add_game_arguments(p_scan)
    p_scan.add_argument("--grid", default="65x33", help="theta x phi grid counts, e.g. 65x33")
    p_scan.add_argument("--epsilon", type=float, default=CLAIM_EPSILON)
    p_scan.add_argument("--out")
    p_scan.set_defaults(func=cmd_ne_scan)

    p_sweep = sub.add_parser("sweep", help="write the payoff landscape as CSV")
    _add_game_arguments(p_sweep)
    p_sweep.add_argument("--grid", default="17x9", help="theta x phi grid counts, e.g. 17x9")
    p_sweep.add_argument("--out")
    p_sweep.set_defaults(func=cmd_sweep)

    p_monty = sub.add_parser("monty", help="run the three-door game")
    p_monty.add_argument("--initial", choices=sorted(_INITIALS), default="entangled")
    p_monty.add_argument("--gamma", type=float, default=0.0, help="switch mix angle in [0, pi/2]")
    p_monty.add_argument("--alice", default="id", help="id, fair, cycle, or a JSON matrix file")
    p_monty.add_argument("--bob", default="id", help="id, fair, cycle, or a JSON matrix file")
    p_monty.add_argument("--json", help="read the full configuration from a JSON file")
    p_monty.add_argument("--out")
    p_monty.set_defaults(func=cmd_monty)

    p_verify = sub.add_parser("verify-claims", help="run the claim verification table")
    p_verify.add_argument("--seed", type=int, default=20240801)
    p_verify.add_argument("--rows", help="only run rows whose key contains this substring")
    p_verify.add_argument("--game-file", help="override one built-in game from a JSON file")
    p_verify.add_argument("--out")
    p_verify.set_defaults(func=cmd_verify_claims)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
