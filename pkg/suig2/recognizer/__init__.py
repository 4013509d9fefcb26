"""The staged recognizer for two-stab unit-square trees."""

from suig2.recognizer.conditions import tail_budget
from suig2.recognizer.layout import layout_single_branch
from suig2.recognizer.service import Decision, RecognizerService, recognize
from suig2.recognizer.stages import StabRelation, StagePlanner, choose_optimized, stab_of_a2
from suig2.recognizer.state import Certificate, Corner, PlacementState, RoleAssignment

__all__ = [
    "Certificate",
    "Corner",
    "Decision",
    "PlacementState",
    "RecognizerService",
    "RoleAssignment",
    "StabRelation",
    "StagePlanner",
    "choose_optimized",
    "layout_single_branch",
    "recognize",
    "stab_of_a2",
    "tail_budget",
]
