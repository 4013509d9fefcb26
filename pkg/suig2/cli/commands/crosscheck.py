"""
The ``crosscheck`` command.

Exhaustive mode prints one JSON line per tree. Random mode only checks
that every accept verifies.
"""

import argparse
import sys

from suig2.cli.commands.oracle import max_n_argument, positive_seconds
from suig2.config import Settings
from suig2.core.exceptions import EXIT_OK, EXIT_REJECTED, InputError
from suig2.core.logging import get_logger
from suig2.oracle.crosscheck import cross_check, fuzz_soundness
from suig2.oracle.search import SearchConfig

logger = get_logger(__name__)


def register(subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]") -> None:
    parser = subparsers.add_parser("crosscheck", help="Compare the recognizer with the oracle")
    parser.add_argument("--max-n", type=max_n_argument, help="Largest tree size to enumerate")
    parser.add_argument("--seed", type=int, help="Seed for --random")
    parser.add_argument(
        "--random",
        nargs=2,
        type=int,
        metavar=("COUNT", "SIZE"),
        help="Fuzz soundness on COUNT random trees of at most SIZE vertices",
    )
    parser.add_argument("--time-budget", type=positive_seconds, metavar="SECONDS")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, settings: Settings) -> int:
    if args.random is not None:
        count, size = args.random
        if count < 0 or size < 1:
            raise InputError("--random needs COUNT >= 0 and SIZE >= 1")
        seed = settings.random_seed if args.seed is None else args.seed
        fuzz = fuzz_soundness(count, size, seed, settings)
        sys.stdout.write(
            f"checked {fuzz.checked} accepted {fuzz.accepted} unsound {len(fuzz.failures)}\n"
        )
        for failure in fuzz.failures:
            sys.stdout.write("# unsound\n" + failure)
        return EXIT_OK if fuzz.passed else EXIT_REJECTED

    cfg = SearchConfig(
        max_n=args.max_n or settings.oracle_max_n,
        epsilon=settings.epsilon_value,
        time_budget=args.time_budget or settings.oracle_time_budget,
    )
    report = cross_check(cfg, settings)
    sys.stdout.write(report.to_jsonl())
    if not report.passed:
        logger.warning(f"{len(report.mismatches)} trees disagree")
    return EXIT_OK if report.passed else EXIT_REJECTED
