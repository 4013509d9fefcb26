"""
Tree data model, edge-list parsing and elementary structural queries.

Vertex ids are the contiguous integers 0..n-1 so that adjacency is an
array indexed by vertex.
"""

import heapq
import random
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from suig2.core.exceptions import EmptyInputError, NotATreeError, ParseError
from suig2.core.logging import get_logger

logger = get_logger(__name__)

Edge = Tuple[int, int]
VertexSet = FrozenSet[int]


def edge_key(u: int, v: int) -> Edge:
    """Canonical (smaller, larger) form of an unordered edge."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Tree:
    """
    An immutable tree on vertices 0..n-1.

    Build instances with :meth:`from_edges` or :func:`parse_tree`; both
    validate connectivity and acyclicity.
    """

    n: int
    edges: Tuple[Edge, ...]
    adjacency: Tuple[Tuple[int, ...], ...] = field(repr=False, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Tree":
        """
        Validate an edge set and build the tree.

        Raises:
            EmptyInputError: If n < 1
            NotATreeError: On self-loops, duplicate edges, cycles or disconnection
        """
        if n < 1:
            raise EmptyInputError()
        neighbors: List[List[int]] = [[] for _ in range(n)]
        seen = set()
        canonical: List[Edge] = []
        for raw in edges:
            u, v = int(raw[0]), int(raw[1])
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(f"Edge {u} {v} uses a vertex outside 0..{n - 1}")
            if u == v:
                raise NotATreeError(f"Self-loop at vertex {u}", reason="cycle", context={"vertex": u})
            key = edge_key(u, v)
            if key in seen:
                raise NotATreeError(
                    f"Duplicate edge {key[0]} {key[1]}",
                    reason="cycle",
                    context={"edge": list(key)},
                )
            seen.add(key)
            canonical.append(key)
            neighbors[u].append(v)
            neighbors[v].append(u)

        if len(canonical) > n - 1:
            raise NotATreeError(
                f"{len(canonical)} edges on {n} vertices contain a cycle",
                reason="cycle",
            )
        reached = _reachable_count(neighbors, 0)
        if reached < n:
            # n-1 edges that do not connect n vertices must close a cycle somewhere
            reason = "cycle" if len(canonical) == n - 1 else "disconnected"
            raise NotATreeError(
                f"Graph is not a tree: only {reached} of {n} vertices reachable from 0",
                reason=reason,
            )

        adjacency = tuple(tuple(sorted(nbrs)) for nbrs in neighbors)
        return cls(n=n, edges=tuple(sorted(canonical)), adjacency=adjacency)

    def has_edge(self, u: int, v: int) -> bool:
        row = self.adjacency[u]
        return v in row


def _reachable_count(neighbors: Sequence[Sequence[int]], root: int) -> int:
    seen = bytearray(len(neighbors))
    seen[root] = 1
    stack = [root]
    count = 1
    while stack:
        u = stack.pop()
        for w in neighbors[u]:
            if not seen[w]:
                seen[w] = 1
                count += 1
                stack.append(w)
    return count


def _read_edge_list(text: str) -> Tuple[int, List[Edge]]:
    edges: List[Edge] = []
    singletons: List[int] = []
    max_id = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        try:
            ids = [int(tok) for tok in tokens]
        except ValueError:
            raise ParseError(f"Malformed token on line {lineno}: {line!r}", line=lineno)
        if any(i < 0 for i in ids):
            raise ParseError(f"Negative vertex id on line {lineno}", line=lineno)
        if len(ids) == 2:
            edges.append((ids[0], ids[1]))
        elif len(ids) == 1:
            singletons.append(ids[0])
        else:
            raise ParseError(
                f"Expected 'u v' on line {lineno}, got {len(ids)} tokens",
                line=lineno,
            )
        max_id = max(max_id, *ids)

    if max_id < 0:
        raise EmptyInputError()
    if singletons and (edges or singletons != [0]):
        raise ParseError("A lone vertex line is only valid as the single line '0'")

    n = max_id + 1
    used = bytearray(n)
    for u, v in edges:
        used[u] = 1
        used[v] = 1
    for s in singletons:
        used[s] = 1
    if not all(used):
        missing = used.index(0)
        raise ParseError(f"Vertex ids must be contiguous 0..{n - 1}; {missing} is missing")
    return n, edges


def parse_tree(text: str, format: str = "edge-list") -> Tree:
    """
    Parse an edge-list document into a Tree.

    One edge "u v" per line; lines starting with '#' and blank lines are
    ignored. A single-vertex tree is written as the lone line "0".

    Raises:
        ParseError: On malformed tokens, unsupported formats or id gaps
        EmptyInputError: If there is nothing to parse
        NotATreeError: If the edges contain a cycle or are disconnected
    """
    if format != "edge-list":
        raise ParseError(f"Unsupported input format: {format}")
    n, edges = _read_edge_list(text)
    tree = Tree.from_edges(n, edges)
    logger.debug(f"Parsed tree with {tree.n} vertices")
    return tree


def parse_graph(text: str) -> nx.Graph:
    """
    Parse an edge list without the tree checks, for verifying drawings of
    arbitrary graphs. Self-loops and repeated edges are still rejected.
    """
    n, edges = _read_edge_list(text)
    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    for u, v in edges:
        if u == v or graph.has_edge(u, v):
            raise ParseError(f"Self-loop or repeated edge {u} {v}")
        graph.add_edge(u, v)
    return graph


def serialize_tree(t: Tree) -> str:
    """Canonical edge-list text: sorted edges, one per line."""
    if t.n == 1:
        return "0\n"
    return "".join(f"{u} {v}\n" for u, v in t.edges)


def degree(t: Tree, v: int) -> int:
    return len(t.adjacency[v])


def max_degree(t: Tree) -> int:
    return max(map(len, t.adjacency))


def branch_vertices(t: Tree) -> VertexSet:
    """Vertices of degree at least 3."""
    return frozenset(v for v, nbrs in enumerate(t.adjacency) if len(nbrs) >= 3)


class ClawIndex:
    """
    Per-edge claw containment after one rooted pass.

    For every vertex v the pass stores how many vertices of degree >= 3 lie
    in the subtree of v (rooted at 0). A component of T - e has a claw iff
    it holds a vertex w other than the cut endpoint with deg(w) >= 3, or the
    cut endpoint itself has degree >= 4.
    """

    def __init__(self, t: Tree) -> None:
        self.tree = t
        n = t.n
        parent = [-1] * n
        order = [0]
        parent[0] = 0
        for u in order:
            for w in t.adjacency[u]:
                if parent[w] == -1:
                    parent[w] = u
                    order.append(w)
        parent[0] = -1
        is_branch = [1 if len(nbrs) >= 3 else 0 for nbrs in t.adjacency]
        below = is_branch[:]
        for u in reversed(order):
            p = parent[u]
            if p >= 0:
                below[p] += below[u]
        self.parent = parent
        self.order = order
        self.is_branch = is_branch
        self.below = below
        self.total = sum(is_branch)

    def side_vertices_branch_count(self, side: int, other: int) -> int:
        """Number of degree >= 3 vertices in the component of T - {side,other} holding side."""
        if self.parent[side] == other:
            return self.below[side]
        # side is the parent of other
        return self.total - self.below[other]

    def has_claw(self, side: int, other: int) -> bool:
        deg_side = len(self.tree.adjacency[side])
        if deg_side >= 4:
            return True
        return self.side_vertices_branch_count(side, other) - self.is_branch[side] > 0


def component_has_claw(t: Tree, removed_edge: Edge, side: int, index: Optional[ClawIndex] = None) -> bool:
    """
    True iff the component of T - removed_edge that contains `side` has a claw.

    Pass a prebuilt ClawIndex to answer many queries in O(1) each.
    """
    u, v = removed_edge
    if side not in (u, v):
        raise ValueError(f"{side} is not an endpoint of edge {removed_edge}")
    if not t.has_edge(u, v):
        raise ValueError(f"{removed_edge} is not an edge of the tree")
    other = v if side == u else u
    index = index or ClawIndex(t)
    return index.has_claw(side, other)


def to_networkx(t: Tree) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(range(t.n))
    graph.add_edges_from(t.edges)
    return graph


def from_networkx(graph: nx.Graph) -> Tree:
    """Relabel a networkx tree to 0..n-1 (sorted node order) and validate it."""
    nodes = sorted(graph.nodes())
    index = {node: i for i, node in enumerate(nodes)}
    return Tree.from_edges(len(nodes), [(index[u], index[v]) for u, v in graph.edges()])


def relabel(t: Tree, permutation: Sequence[int]) -> Tree:
    """Tree with vertex v renamed to permutation[v]."""
    if sorted(permutation) != list(range(t.n)):
        raise ValueError("permutation must be a rearrangement of 0..n-1")
    return Tree.from_edges(t.n, [(permutation[u], permutation[v]) for u, v in t.edges])


def random_tree(n: int, rng: random.Random) -> Tree:
    """
    Uniformly random labeled tree on n vertices via a random Pruefer sequence.
    """
    if n < 1:
        raise EmptyInputError()
    if n == 1:
        return Tree.from_edges(1, [])
    if n == 2:
        return Tree.from_edges(2, [(0, 1)])
    sequence = [rng.randrange(n) for _ in range(n - 2)]
    return tree_from_pruefer(sequence)


def tree_from_pruefer(sequence: Sequence[int]) -> Tree:
    n = len(sequence) + 2
    remaining = [1] * n
    for s in sequence:
        remaining[s] += 1
    heap = [v for v in range(n) if remaining[v] == 1]
    heapq.heapify(heap)
    edges: List[Edge] = []
    for s in sequence:
        leaf = heapq.heappop(heap)
        edges.append((leaf, s))
        remaining[s] -= 1
        if remaining[s] == 1:
            heapq.heappush(heap, s)
    u = heapq.heappop(heap)
    w = heapq.heappop(heap)
    edges.append((u, w))
    return Tree.from_edges(n, edges)
