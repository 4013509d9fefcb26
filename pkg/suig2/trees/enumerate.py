"""Free-tree enumeration for exhaustive cross-checks."""

from typing import Iterator

import networkx as nx

from suig2.core.logging import get_logger
from suig2.trees.tree import Tree, from_networkx

logger = get_logger(__name__)

MAX_ENUMERATION_N = 12


def enumerate_trees(n: int) -> Iterator[Tree]:
    """
    Yield one representative per isomorphism class of free trees on n vertices.

    networkx generates the classes in canonical level-sequence order
    (WROM algorithm), so the stream is deterministic.
    """
    if not 1 <= n <= MAX_ENUMERATION_N:
        raise ValueError(f"n must lie in 1..{MAX_ENUMERATION_N}, got {n}")
    if n == 1:
        yield Tree.from_edges(1, [])
        return
    count = 0
    for graph in nx.nonisomorphic_trees(n):
        count += 1
        yield from_networkx(graph)
    logger.debug(f"Enumerated {count} free trees on {n} vertices")
