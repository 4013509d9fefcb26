"""
JSON and SVG documents for representations.

Both emitters are byte-deterministic for a given Representation: JSON
through fixed pydantic field order, SVG through a fixed hash salt and no
date metadata.
"""

import io
from fractions import Fraction
from typing import Dict

import matplotlib

matplotlib.use("Agg")

from matplotlib.figure import Figure  # noqa: E402
from matplotlib.patches import Rectangle  # noqa: E402
from pydantic import ValidationError  # noqa: E402

from suig2.core.exceptions import ParseError  # noqa: E402
from suig2.core.logging import get_logger  # noqa: E402
from suig2.geometry.representation import Representation, Square, Stab  # noqa: E402
from suig2.schemas.documents import (  # noqa: E402
    RationalDocument,
    RepresentationDocument,
    SquareDocument,
    StabName,
)

logger = get_logger(__name__)

# One coordinate unit is drawn as 100 SVG user units (points).
SVG_UNITS_PER_COORDINATE = 100
_POINTS_PER_INCH = 72
_MARGIN = Fraction(1, 2)

_FILL = {Stab.LOWER: "#9ecae1", Stab.UPPER: "#fdae6b"}


def to_document(r: Representation) -> RepresentationDocument:
    return RepresentationDocument(
        epsilon=RationalDocument.of(r.epsilon),
        squares=[
            SquareDocument(
                v=v,
                x=RationalDocument.of(sq.x),
                y=RationalDocument.of(sq.y),
                stab=StabName(sq.stab.value),
            )
            for v, sq in r.squares()
        ],
    )


def emit_json(r: Representation) -> str:
    return to_document(r).model_dump_json(by_alias=True, indent=2) + "\n"


def parse_json(text: str) -> Representation:
    """
    Read a representation document.

    Raises:
        ParseError: If the document is not valid JSON or fails the schema
    """
    try:
        document = RepresentationDocument.model_validate_json(text)
    except ValidationError as e:
        first = e.errors()[0]
        location = ".".join(str(part) for part in first.get("loc", ()))
        raise ParseError(
            f"Invalid representation document at {location or 'root'}: {first.get('msg')}",
            context={"errors": e.error_count()},
        )
    squares: Dict[int, Square] = {
        s.v: Square(s.x.value(), s.y.value(), Stab(s.stab.value)) for s in document.squares
    }
    epsilon = document.epsilon.value()
    if not 0 < epsilon < 1:
        raise ParseError(f"epsilon must lie in (0, 1), got {epsilon}")
    return Representation.from_squares(epsilon, squares)


def emit_svg(r: Representation) -> str:
    """
    Draw squares as rectangles, the two stab lines dashed, and vertex labels.
    """
    epsilon = r.epsilon
    if len(r):
        x_min = min(r.xs) - _MARGIN
        x_max = max(r.xs) + 1 + _MARGIN
    else:
        x_min, x_max = -_MARGIN, 1 + _MARGIN
    y_min = -_MARGIN
    y_max = 3 + epsilon + _MARGIN
    width = float(x_max - x_min)
    height = float(y_max - y_min)

    with matplotlib.rc_context(
        {"svg.hashsalt": "suig2", "svg.fonttype": "none", "font.size": 10}
    ):
        figure = Figure(
            figsize=(
                width * SVG_UNITS_PER_COORDINATE / _POINTS_PER_INCH,
                height * SVG_UNITS_PER_COORDINATE / _POINTS_PER_INCH,
            )
        )
        ax = figure.add_axes((0, 0, 1, 1))
        ax.set_xlim(float(x_min), float(x_max))
        ax.set_ylim(float(y_min), float(y_max))
        ax.set_aspect("equal")
        ax.set_axis_off()

        for name, level in (("lower", 1), ("upper", 2 + epsilon)):
            ax.axhline(
                float(level),
                linestyle="--",
                linewidth=1,
                color="#555555",
                gid=f"stab-{name}",
            )
        for v, sq in r.squares():
            ax.add_patch(
                Rectangle(
                    (float(sq.x), float(sq.y)),
                    1,
                    1,
                    facecolor=_FILL[sq.stab],
                    edgecolor="#08306b",
                    alpha=0.6,
                    gid=f"square-{v}",
                )
            )
            ax.text(
                float(sq.x) + 0.5,
                float(sq.y) + 0.5,
                str(v),
                ha="center",
                va="center",
                gid=f"label-{v}",
            )

        buffer = io.StringIO()
        figure.savefig(buffer, format="svg", metadata={"Date": None})
    logger.debug(f"Rendered SVG for {len(r)} squares")
    return buffer.getvalue()
