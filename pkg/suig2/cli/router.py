"""
Argument parser aggregating all command modules.
"""

import argparse

from suig2.cli.commands import crosscheck, oracle, recognize, verify

COMMANDS = (recognize, verify, oracle, crosscheck)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="suig2",
        description="suig2 - recognize trees with unit-square representations on two stab lines",
    )
    parser.add_argument("--version", action="store_true", help="Show version and exit")
    parser.add_argument("-v", "--verbose", action="store_true", help="Log at DEBUG level")
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    for command in COMMANDS:
        command.register(subparsers)
    return parser
