"""
suig2 - Entry point for running from a source checkout.

The main code is in the suig2 package.

Usage:
    python main.py recognize tree.txt

Or use the package directly:
    python -m suig2 recognize tree.txt
    suig2 recognize tree.txt
"""

import sys

from suig2.__main__ import main

if __name__ == "__main__":
    sys.exit(main())
