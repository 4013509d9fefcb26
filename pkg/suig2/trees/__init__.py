"""Trees: the data model, red-edge structure and enumeration."""

from suig2.trees.enumerate import enumerate_trees
from suig2.trees.red import (
    Decomposition,
    ExtendedRedPath,
    PathOrigin,
    RedEdgeSet,
    RedOutcomeKind,
    RedPathOutcome,
    Tails,
    decompose,
    extended_red_path,
    red_edges,
    red_path_or_fail,
)
from suig2.trees.tree import (
    ClawIndex,
    Tree,
    branch_vertices,
    component_has_claw,
    degree,
    max_degree,
    parse_graph,
    parse_tree,
    random_tree,
    relabel,
    serialize_tree,
    to_networkx,
)

__all__ = [
    "ClawIndex",
    "Decomposition",
    "ExtendedRedPath",
    "PathOrigin",
    "RedEdgeSet",
    "RedOutcomeKind",
    "RedPathOutcome",
    "Tails",
    "Tree",
    "branch_vertices",
    "component_has_claw",
    "decompose",
    "degree",
    "enumerate_trees",
    "extended_red_path",
    "max_degree",
    "parse_graph",
    "parse_tree",
    "random_tree",
    "red_edges",
    "red_path_or_fail",
    "relabel",
    "serialize_tree",
    "to_networkx",
]
