"""The ``oracle`` command: decide a small tree by exhaustive search."""

import argparse
import sys

from suig2.cli.inputs import read_text, with_epsilon
from suig2.config import Settings
from suig2.core.exceptions import EXIT_BUDGET, EXIT_OK, EXIT_REJECTED, BudgetExceededError
from suig2.geometry.emit import emit_json
from suig2.oracle.search import ORACLE_HARD_CAP, SearchConfig, brute_force_2suig
from suig2.trees.tree import parse_tree


def max_n_argument(text: str) -> int:
    value = int(text)
    if not 1 <= value <= ORACLE_HARD_CAP:
        raise argparse.ArgumentTypeError(f"must lie in 1..{ORACLE_HARD_CAP}")
    return value


def positive_seconds(text: str) -> float:
    value = float(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def register(subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]") -> None:
    parser = subparsers.add_parser("oracle", help="Decide a small tree by brute force")
    parser.add_argument("input", help="Edge-list file, or - for stdin")
    parser.add_argument("--max-n", type=max_n_argument, help="Largest instance to search")
    parser.add_argument("--time-budget", type=positive_seconds, metavar="SECONDS")
    parser.add_argument("--json", action="store_true", help="Print an accepted representation")
    parser.add_argument("--epsilon", metavar="P/Q", help="Stab gap, a rational in (0, 1)")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, settings: Settings) -> int:
    settings = with_epsilon(settings, args.epsilon)
    cfg = SearchConfig(
        max_n=args.max_n or settings.oracle_max_n,
        epsilon=settings.epsilon_value,
        time_budget=args.time_budget or settings.oracle_time_budget,
    )
    t = parse_tree(read_text(args.input))
    try:
        result = brute_force_2suig(t, cfg)
    except BudgetExceededError:
        sys.stdout.write("UNKNOWN\n")
        return EXIT_BUDGET
    if result.accepted and args.json:
        assert result.representation is not None
        sys.stdout.write(emit_json(result.representation))
    else:
        sys.stdout.write(f"{result.decision.value}\n")
    return EXIT_OK if result.accepted else EXIT_REJECTED
