"""
Entry point for running suig2 as a module.

Usage:
    python -m suig2 recognize tree.txt
    python -m suig2 crosscheck --max-n 6
"""

import logging
import sys
from typing import List, Optional

from suig2.cli.exceptions import handle_errors
from suig2.cli.router import build_parser
from suig2.core.exceptions import EXIT_OK, EXIT_USAGE


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point for CLI."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    if args.version:
        from suig2 import __version__

        print(f"suig2 v{__version__}")
        return EXIT_OK

    if args.command is None:
        parser.print_help(sys.stderr)
        return EXIT_USAGE

    try:
        from suig2.config import get_settings
        from suig2.core.logging import level_from_name, setup_logging

        settings = get_settings()
        verbose = args.verbose or settings.debug
        setup_logging(logging.DEBUG if verbose else level_from_name(settings.log_level))
        return args.handler(args, settings)
    except BaseException as e:  # noqa: B036
        if isinstance(e, SystemExit):
            raise
        return handle_errors(e)


if __name__ == "__main__":
    sys.exit(main())
