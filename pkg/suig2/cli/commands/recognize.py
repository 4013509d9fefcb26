"""
The ``recognize`` command.

Prints ACCEPT or REJECT with a one-line certificate summary; ``--json``
prints the representation or certificate document instead.
"""

import argparse
import sys
from pathlib import Path

from suig2.cli.inputs import read_text, with_epsilon
from suig2.config import Settings
from suig2.core.exceptions import EXIT_OK, EXIT_REJECTED
from suig2.core.logging import get_logger
from suig2.geometry.emit import emit_json, emit_svg
from suig2.recognizer.service import RecognizerService
from suig2.trees.tree import parse_tree

logger = get_logger(__name__)


def register(subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]") -> None:
    parser = subparsers.add_parser("recognize", help="Decide a tree and build its representation")
    parser.add_argument("input", help="Edge-list file, or - for stdin")
    parser.add_argument("--json", action="store_true", help="Print the JSON document")
    parser.add_argument("--svg", metavar="OUT", help="Also draw an accepted representation to OUT")
    parser.add_argument("--explain", action="store_true", help="Dump the decomposition to stderr")
    parser.add_argument("--epsilon", metavar="P/Q", help="Stab gap, a rational in (0, 1)")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, settings: Settings) -> int:
    settings = with_epsilon(settings, args.epsilon)
    t = parse_tree(read_text(args.input))
    decision = RecognizerService(settings).recognize(t)

    if args.explain:
        if decision.decomposition is None:
            print("no decomposition: decided before the red path", file=sys.stderr)
        else:
            document = decision.decomposition.to_document()
            print(document.model_dump_json(by_alias=True, indent=2), file=sys.stderr)

    if decision.accepted:
        assert decision.representation is not None
        if args.svg:
            Path(args.svg).write_text(emit_svg(decision.representation), encoding="utf-8")
            logger.info(f"Wrote {args.svg}")
        sys.stdout.write(emit_json(decision.representation) if args.json else "ACCEPT\n")
        return EXIT_OK

    certificate = decision.certificate
    assert certificate is not None
    if args.json:
        sys.stdout.write(certificate.to_document().model_dump_json(by_alias=True, indent=2) + "\n")
    else:
        sys.stdout.write(f"REJECT {certificate.summary()}\n")
    return EXIT_REJECTED
