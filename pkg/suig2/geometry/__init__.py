"""Exact square representations, their verification and their documents."""

from suig2.geometry.emit import emit_json, emit_svg, parse_json, to_document
from suig2.geometry.rationals import (
    DEFAULT_CLAW_CONSTANT,
    DEFAULT_EPSILON,
    Number,
    format_rational,
    independence_number,
    parse_rational,
    shrinked_offsets,
    shrinked_span,
)
from suig2.geometry.representation import (
    ExtraEdge,
    MissingEdge,
    PathClassification,
    PathKind,
    Representation,
    Square,
    Stab,
    StabViolation,
    UncoveredVertex,
    VerifyReport,
    classify_path,
    intersection_graph,
    span,
    touching_pairs,
    verify,
)

__all__ = [
    "DEFAULT_CLAW_CONSTANT",
    "DEFAULT_EPSILON",
    "ExtraEdge",
    "MissingEdge",
    "Number",
    "PathClassification",
    "PathKind",
    "Representation",
    "Square",
    "Stab",
    "StabViolation",
    "UncoveredVertex",
    "VerifyReport",
    "classify_path",
    "emit_json",
    "emit_svg",
    "format_rational",
    "independence_number",
    "intersection_graph",
    "parse_json",
    "parse_rational",
    "shrinked_offsets",
    "shrinked_span",
    "span",
    "to_document",
    "touching_pairs",
    "verify",
]
