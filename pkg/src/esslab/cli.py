"""Command-line interface.

Exit codes: 0 success or positive answer, 1 negative answer, 2 usage or
input error, 3 internal consistency failure. With ``--format json`` exactly
one JSON document is written to stdout; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Sequence

from .clique import max_clique, modified_adjacency_value, motzkin_straus_value, scaled_simplex_value
from .core import ConsistencyError, MixedStrategy, ParseError, SymmetricGame, format_rational, parse_graph, parse_rational
from .enclosure import approx
from .ess import CapExceeded, check_ess, ess_enumerate, invasion_threshold
from .fixtures import crab_game, rock_paper_scissors
from .reduction import (
    EL1,
    ReductionError,
    ReductionParams,
    UndecidedError,
    build_game,
    el1_intervals,
    elx_intervals,
    in_validity_region,
    robust_rectangle,
)
from .robustness import fuzz_reduction, random_game_experiment
from .search import ADAPTIVE, CONSERVATIVE, binary_clique_search
from .simplex_qp import SimplexQpError

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


class UsageError(Exception):
    pass


@dataclass
class CommandResult:
    exit_code: int
    payload: dict
    text: str


# --------------------------------------------------------------------------
# Argument helpers
# --------------------------------------------------------------------------


def _rational(text: str):
    try:
        return parse_rational(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _exponent(text: str):
    if text == EL1:
        return EL1
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"x must be an integer or {EL1!r}, got {text!r}") from None


def _sizes(text: str) -> list[int]:
    try:
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"sizes must be comma-separated integers, got {text!r}") from None


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(path: str):
    return parse_graph(_read(path))


def _load_game(path: str) -> SymmetricGame:
    try:
        return SymmetricGame.loads(_read(path))
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON ({exc})") from None


def _load_strategy(path: str, game: SymmetricGame) -> MixedStrategy:
    try:
        s = MixedStrategy.from_json(json.loads(_read(path)))
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON ({exc})") from None
    if s.size != game.size:
        raise UsageError(f"{path}: strategy has {s.size} entries, game has {game.size} strategies")
    return s


def _regime_x(args) -> object:
    if args.regime == EL1:
        return EL1
    if args.x is None or args.x == EL1:
        raise UsageError("--regime elx needs an integer --x")
    return args.x


# --------------------------------------------------------------------------
# Subcommands
# --------------------------------------------------------------------------


def cmd_intervals(args) -> CommandResult:
    x = _regime_x(args)
    report = el1_intervals(args.n, args.rho) if x == EL1 else elx_intervals(args.n, x, args.rho)
    payload = report.to_json()
    lines = [f"n = {args.n}, x = {x}"]
    for i, r in enumerate(report.regime_intervals, 1):
        lines.append(f"rho regime {i}: {r.describe()}")
    if args.rho is not None:
        lines.append(f"rho = {format_rational(args.rho)}: regime {report.regime}")
        if report.tau_interval is not None:
            lines.append(f"tau in {report.tau_interval.describe()}  (nonempty: {report.nonempty})")
        else:
            lines.append("tau interval empty")
    code = EXIT_NEGATIVE if args.rho is not None and not report.nonempty else EXIT_OK
    return CommandResult(code, payload, "\n".join(lines))


def cmd_rectangle(args) -> CommandResult:
    rect = robust_rectangle(args.n, args.x0, args.x1, args.A)
    payload = rect.to_json()
    lines = [
        f"n = {rect.n}, x0 = {rect.x0}, x1 = {format_rational(rect.x1)}",
        f"C = {approx(rect.C):.12g}  D = {approx(rect.D):.12g}  A = {approx(rect.A):.12g}  B = {approx(rect.B):.12g}",
        f"rho_C = {approx(rect.rho_C):.12g}",
        f"tau in {rect.tau_interval.describe()}",
        f"rho in {rect.rho_interval.describe()}",
    ]
    for k in range(2, rect.n + 1):
        lines.append(f"lambda({k}) in {rect.lambda_interval(k).describe()}")
    return CommandResult(EXIT_OK, payload, "\n".join(lines))


def cmd_reduce(args) -> CommandResult:
    g = _load_graph(args.graph)
    x = _regime_x(args)
    params = ReductionParams(args.k, args.tau, args.rho, x)
    valid = in_validity_region(g.n, x, params.tau, params.rho) if g.n >= 2 else False
    if not valid:
        print(f"warning: (tau, rho) is outside the validity region for n = {g.n}, x = {x}", file=sys.stderr)
    game = build_game(g, params)
    if args.output:
        Path(args.output).write_text(game.dumps())
    payload = {"params": params.to_json(), "in_validity_region": valid, "game": game.to_json()}
    text = game.dumps().rstrip() if not args.output else f"wrote {game.size}x{game.size} game to {args.output}"
    return CommandResult(EXIT_OK, payload, text)


def _verdict_lines(verdicts, labels) -> list[str]:
    return [f"  {v.strategy.describe(labels)}  {v.strategy.to_json()}" for v in verdicts]


def cmd_ess(args) -> CommandResult:
    game = _load_game(args.game)
    if args.ess_command == "check":
        s = _load_strategy(args.strategy, game)
        v = check_ess(game, s)
        text = f"{s.describe(game.labels)}: symmetric NE {v.is_symmetric_ne}, ESS {v.is_ess}"
        if v.counterexample is not None:
            text += f"\ncounterexample: {v.counterexample.describe(game.labels)}"
        return CommandResult(EXIT_OK if v.is_ess else EXIT_NEGATIVE, v.to_json(game.labels), text)
    if args.ess_command == "decide":
        verdicts = ess_enumerate(game, first_only=True)
        exists = bool(verdicts)
        payload = {"ess_exists": exists, "witness": verdicts[0].to_json(game.labels) if exists else None}
        text = "ESS exists: yes" if exists else "ESS exists: no"
        if exists:
            text += f" ({verdicts[0].strategy.describe(game.labels)})"
        return CommandResult(EXIT_OK if exists else EXIT_NEGATIVE, payload, text)
    verdicts = ess_enumerate(game, include_non_ess=args.all)
    ess = [v for v in verdicts if v.is_ess]
    payload = {"ess_exists": bool(ess), "verdicts": [v.to_json(game.labels) for v in verdicts]}
    lines = [f"{len(ess)} ESS"] + _verdict_lines(ess, game.labels)
    if args.all:
        others = [v for v in verdicts if not v.is_ess]
        lines.append(f"{len(others)} other symmetric equilibria")
        lines += _verdict_lines(others, game.labels)
    return CommandResult(EXIT_OK if ess else EXIT_NEGATIVE, payload, "\n".join(lines))


def cmd_invasion(args) -> CommandResult:
    game = _load_game(args.game)
    s = _load_strategy(args.incumbent, game)
    t = _load_strategy(args.mutant, game)
    out = invasion_threshold(game, s, t)
    thr = "none" if out.threshold is None else format_rational(out.threshold)
    payload = {
        "threshold": thr,
        "delta1": format_rational(out.delta1),
        "delta2": format_rational(out.delta2),
    }
    text = f"invasion threshold {thr} (delta1 = {payload['delta1']}, delta2 = {payload['delta2']})"
    return CommandResult(EXIT_OK if out.threshold is not None else EXIT_NEGATIVE, payload, text)


def cmd_clique(args) -> CommandResult:
    g = _load_graph(args.graph)
    if args.clique_command == "max":
        rep = max_clique(g, enumerate_all=args.all)
        payload = {"max_clique_size": rep.max_clique_size, "witness": list(rep.witness)}
        text = f"clique number {rep.max_clique_size}, witness {list(rep.witness)}"
        if rep.all_maximum_cliques is not None:
            payload["all_maximum_cliques"] = [list(c) for c in rep.all_maximum_cliques]
            text += "\nall maximum cliques: " + ", ".join(str(list(c)) for c in rep.all_maximum_cliques)
        return CommandResult(EXIT_OK, payload, text)
    mode = ADAPTIVE if args.adaptive else CONSERVATIVE
    trace = binary_clique_search(g, args.x, mode, args.seed)
    lines = [f"{'min':>4} {'max':>4} {'mid':>4}  answer"]
    lines += [f"{s.low:>4} {s.high:>4} {s.mid:>4}  {s.answer}" for s in trace.steps]
    lines.append(f"result {trace.result}, oracle calls {trace.oracle_calls}")
    return CommandResult(EXIT_OK, trace.to_json(), "\n".join(lines))


def cmd_fuzz(args) -> CommandResult:
    report = fuzz_reduction(args.n, args.x0, args.trials, args.seed, args.workers)
    code = EXIT_OK if not report.disagreements else EXIT_NEGATIVE
    return CommandResult(code, report.to_json(), report.to_text())


def cmd_experiment(args) -> CommandResult:
    table = random_game_experiment(args.sizes, args.trials, args.seed, args.workers)
    if args.csv:
        Path(args.csv).write_text(table.to_csv())
    return CommandResult(EXIT_OK, table.to_json(), table.to_text())


def cmd_motzkin(args) -> CommandResult:
    g = _load_graph(args.graph)
    d = max_clique(g).max_clique_size
    payload = {"clique_number": d, "value": format_rational(motzkin_straus_value(g))}
    lines = [f"clique number {d}, max x^T A x over the simplex = {payload['value']}"]
    if (args.tau is None) != (args.rho is None):
        raise UsageError("--tau and --rho must be given together")
    if args.tau is not None:
        v = modified_adjacency_value(g, args.tau, args.rho)
        payload["modified_value"] = format_rational(v)
        lines.append(f"modified adjacency (tau={format_rational(args.tau)}, rho={format_rational(args.rho)}): {payload['modified_value']}")
    if args.scale is not None:
        v = scaled_simplex_value(g, args.scale)
        payload["scale"] = format_rational(args.scale)
        payload["scaled_value"] = format_rational(v)
        lines.append(f"over the simplex of mass {payload['scale']}: {payload['scaled_value']}")
    return CommandResult(EXIT_OK, payload, "\n".join(lines))


def cmd_demo(args) -> CommandResult:
    game = crab_game() if args.name == "crab" else rock_paper_scissors()
    verdicts = ess_enumerate(game)
    ess = [v for v in verdicts if v.is_ess]
    pure = [check_ess(game, game.pure(i)) for i in range(game.size)]
    payload = {
        "game": game.to_json(),
        "ess_exists": bool(ess),
        "ess": [v.to_json(game.labels) for v in ess],
        "pure_strategies": {game.labels[i]: v.to_json(game.labels) for i, v in enumerate(pure)},
    }
    lines = [f"{args.name}: {len(ess)} ESS"] + _verdict_lines(ess, game.labels)
    for i, v in enumerate(pure):
        lines.append(f"pure {game.labels[i]}: symmetric NE {v.is_symmetric_ne}, ESS {v.is_ess}")
    if args.name == "crab":
        large, small = game.pure("Large"), game.pure("Small")
        out = invasion_threshold(game, large, small)
        payload["invasion_large_vs_small"] = None if out.threshold is None else format_rational(out.threshold)
        back = invasion_threshold(game, small, large)
        payload["invasion_small_vs_large"] = None if back.threshold is None else format_rational(back.threshold)
        lines.append(f"Large repels Small for mutant shares below {payload['invasion_large_vs_small']}")
        lines.append(f"Small repels Large: {payload['invasion_small_vs_large'] or 'never'}")
    return CommandResult(EXIT_OK if ess else EXIT_NEGATIVE, payload, "\n".join(lines))


# --------------------------------------------------------------------------
# Parser
# --------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="esslab", description="Exact ESS decisions and clique reduction games.")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, handler: Callable, **kw) -> argparse.ArgumentParser:
        p = sub.add_parser(name, **kw)
        p.set_defaults(handler=handler)
        return p

    p = add("intervals", cmd_intervals, help="valid (tau, rho) region")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--regime", choices=(EL1, "elx"), required=True)
    p.add_argument("--x", type=_exponent)
    p.add_argument("--rho", type=_rational)

    p = add("rectangle", cmd_rectangle, help="robust parameter rectangle")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x0", type=int, required=True)
    p.add_argument("--x1", type=_rational)
    p.add_argument("--A", type=_rational)

    p = add("reduce", cmd_reduce, help="build a reduction game from a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--regime", choices=(EL1, "elx"), required=True)
    p.add_argument("--x", type=_exponent)
    p.add_argument("--tau", type=_rational, required=True)
    p.add_argument("--rho", type=_rational, required=True)
    p.add_argument("-o", "--output")

    p = add("ess", cmd_ess, help="ESS decisions on a game file")
    ess_sub = p.add_subparsers(dest="ess_command", required=True, parser_class=_Parser)
    q = ess_sub.add_parser("decide")
    q.add_argument("--game", required=True)
    q = ess_sub.add_parser("enumerate")
    q.add_argument("--game", required=True)
    q.add_argument("--all", action="store_true", help="also list equilibria that are not ESS")
    q = ess_sub.add_parser("check")
    q.add_argument("--game", required=True)
    q.add_argument("--strategy", required=True)

    p = add("invasion", cmd_invasion, help="invasion threshold of a mutant")
    p.add_argument("--game", required=True)
    p.add_argument("--incumbent", required=True)
    p.add_argument("--mutant", required=True)

    p = add("clique", cmd_clique, help="clique number, directly or through the ESS oracle")
    cl_sub = p.add_subparsers(dest="clique_command", required=True, parser_class=_Parser)
    q = cl_sub.add_parser("max")
    q.add_argument("--graph", required=True)
    q.add_argument("--all", action="store_true")
    q = cl_sub.add_parser("via-ess")
    q.add_argument("--graph", required=True)
    q.add_argument("--x", type=_exponent, default=EL1)
    q.add_argument("--adaptive", action="store_true")
    q.add_argument("--seed", type=int, default=0)

    p = add("fuzz", cmd_fuzz, help="perturbation fuzzing of the robust reduction")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x0", type=int, default=3)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)

    p = add("experiment", cmd_experiment, help="random-game ESS frequency")
    ex_sub = p.add_subparsers(dest="experiment", required=True, parser_class=_Parser)
    q = ex_sub.add_parser("random-ess")
    q.add_argument("--sizes", type=_sizes, required=True)
    q.add_argument("--trials", type=int, required=True)
    q.add_argument("--seed", type=int, required=True)
    q.add_argument("--workers", type=int, default=1)
    q.add_argument("--csv", help="also write the table as CSV")

    p = add("motzkin", cmd_motzkin, help="quadratic-program value of a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--tau", type=_rational)
    p.add_argument("--rho", type=_rational)
    p.add_argument("--scale", type=_rational)

    p = add("demo", cmd_demo, help="built-in example games")
    p.add_argument("name", choices=("crab", "rps"))
    return parser


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    fmt = "text"
    try:
        args = build_parser().parse_args(argv)
        fmt = args.format
        result = args.handler(args)
    except SystemExit as exc:
        return int(exc.code or 0)
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=stderr)
        return EXIT_INTERNAL
    except (UsageError, ParseError, ReductionError, CapExceeded, SimplexQpError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    except UndecidedError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INTERNAL
    if fmt == "json":
        stdout.write(json.dumps(result.payload, sort_keys=True, indent=2) + "\n")
    else:
        stdout.write(result.text + "\n")
    return result.exit_code


def main() -> None:
    sys.exit(run())
