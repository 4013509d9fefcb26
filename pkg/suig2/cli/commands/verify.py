"""The ``verify`` command: check a representation document against an edge list."""

import argparse
import sys

from suig2.cli.inputs import read_text
from suig2.config import Settings
from suig2.core.exceptions import EXIT_OK, EXIT_REJECTED, NotATreeError
from suig2.geometry.emit import parse_json
from suig2.geometry.representation import verify
from suig2.trees.tree import parse_graph, parse_tree


def register(subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]") -> None:
    parser = subparsers.add_parser("verify", help="Check a representation against a graph")
    parser.add_argument("graph", help="Edge-list file (need not be a tree)")
    parser.add_argument("representation", help="Representation JSON document")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, _settings: Settings) -> int:
    text = read_text(args.graph)
    try:
        graph = parse_tree(text)
    except NotATreeError:
        graph = parse_graph(text)
    representation = parse_json(read_text(args.representation))
    report = verify(representation, graph)
    if report.passed:
        sys.stdout.write("PASS\n")
        return EXIT_OK
    sys.stdout.write("FAIL\n")
    for line in report.lines():
        sys.stdout.write(line + "\n")
    return EXIT_REJECTED
