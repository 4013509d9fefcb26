"""
Exact rational helpers and the global layout constants.

All coordinates in the system are ``int`` or ``fractions.Fraction``; no
float ever reaches a comparison.
"""

import re
from fractions import Fraction
from typing import List, Union

from suig2.core.exceptions import ParseError

Number = Union[int, Fraction]

DEFAULT_EPSILON = Fraction(1, 2)
DEFAULT_CLAW_CONSTANT = Fraction(1, 4)

_RATIONAL_RE = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(text: str) -> Fraction:
    """
    Parse ``"p/q"`` or ``"p"`` into a reduced Fraction.

    Raises:
        ParseError: If the text is not an integer ratio or q is zero
    """
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise ParseError(f"Not a rational number: {text!r}")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise ParseError(f"Zero denominator in {text!r}")
    return Fraction(numerator, denominator)


def format_rational(value: Number) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def normalize(value: Number) -> Number:
    """Collapse integral Fractions to ``int`` so that hot loops compare ints."""
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


def ceil_half(q: int) -> int:
    return (q + 1) // 2


def independence_number(q: int) -> int:
    """Independence number of a path on q vertices."""
    return ceil_half(q)


def shrinked_offsets(q: int, c: Fraction = DEFAULT_CLAW_CONSTANT) -> List[Number]:
    """
    Offsets of a shrinked monotone path on q vertices.

    Squares come in pairs: j sits at floor(j/2)*(1+eta) + (j mod 2)*eta with
    eta = c / floor(q/2). Consecutive squares are at most 1 apart, squares
    two apart are 1+eta apart, and the span is ceil(q/2) + c.
    """
    if q <= 1:
        return [0] * q
    eta = c / (q // 2)
    return [normalize((j // 2) * (1 + eta) + (j % 2) * eta) for j in range(q)]


def shrinked_span(q: int, c: Fraction = DEFAULT_CLAW_CONSTANT) -> Number:
    if q <= 1:
        return q
    return normalize(ceil_half(q) + c)
