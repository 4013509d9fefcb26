"""Command-line front end."""

from suig2.cli.router import build_parser

__all__ = ["build_parser"]
