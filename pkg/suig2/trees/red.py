"""
Red edges, the extended red path and the red/agent/tail decomposition.

An edge is red when both components left by deleting it contain a claw.
In a tree that can be drawn with two stabs the red edges form one path;
extending that path over degree-2 endpoints gives the spine A = a1..ak
along which the recognizer places squares.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

from suig2.core.exceptions import MalformedPeripheryError, NoSpecialVertexError
from suig2.core.logging import get_logger
from suig2.schemas.documents import AgentEntry, DecompositionDocument, TailEntry
from suig2.trees.tree import ClawIndex, Edge, Tree, branch_vertices, edge_key

logger = get_logger(__name__)


@dataclass(frozen=True)
class RedEdgeSet:
    """Edges of a host tree whose removal leaves a claw on both sides."""

    edges: FrozenSet[Edge]

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[Edge]:
        return iter(sorted(self.edges))

    def __contains__(self, edge: object) -> bool:
        if isinstance(edge, tuple) and len(edge) == 2:
            return edge_key(edge[0], edge[1]) in self.edges
        return False

    def vertices(self) -> FrozenSet[int]:
        return frozenset(v for e in self.edges for v in e)


def red_edges(t: Tree, index: Optional[ClawIndex] = None) -> RedEdgeSet:
    """All red edges, from one rooted pass (see ClawIndex)."""
    index = index or ClawIndex(t)
    red = frozenset(
        (u, v) for u, v in t.edges if index.has_claw(u, v) and index.has_claw(v, u)
    )
    logger.debug(f"Found {len(red)} red edges on {t.n} vertices")
    return RedEdgeSet(red)


class RedOutcomeKind(str, Enum):
    NO_RED_EDGES = "no-red-edges"
    PATH = "path"
    NOT_A_PATH = "not-a-path"


@dataclass(frozen=True)
class RedPathOutcome:
    """
    Result of checking that the red edges induce a path.

    ``path`` is the ordered red path for PATH; ``witness`` holds one vertex of
    red degree >= 3, or one endpoint of each of two disconnected red edges.
    """

    kind: RedOutcomeKind
    path: Tuple[int, ...] = ()
    witness: Tuple[int, ...] = ()


def red_path_or_fail(t: Tree, r: RedEdgeSet) -> RedPathOutcome:
    if not r.edges:
        return RedPathOutcome(RedOutcomeKind.NO_RED_EDGES)

    red_adj: Dict[int, List[int]] = {}
    for u, v in sorted(r.edges):
        red_adj.setdefault(u, []).append(v)
        red_adj.setdefault(v, []).append(u)

    heavy = sorted(v for v, nbrs in red_adj.items() if len(nbrs) >= 3)
    if heavy:
        return RedPathOutcome(RedOutcomeKind.NOT_A_PATH, witness=(heavy[0],))

    start = min(v for v, nbrs in red_adj.items() if len(nbrs) == 1)
    path = [start]
    previous = -1
    current = start
    while True:
        nxt = [w for w in red_adj[current] if w != previous]
        if not nxt:
            break
        previous, current = current, nxt[0]
        path.append(current)

    if len(path) != len(red_adj):
        # Cannot happen in a tree: a path between two red edges is red itself.
        stray = min(v for v in red_adj if v not in set(path))
        return RedPathOutcome(RedOutcomeKind.NOT_A_PATH, witness=(start, stray))
    return RedPathOutcome(RedOutcomeKind.PATH, path=tuple(path))


class PathOrigin(str, Enum):
    FROM_RED_PATH = "from-red-path"
    NO_RED_EDGE_SPECIAL_VERTEX = "no-red-edge-special-vertex"


@dataclass(frozen=True)
class ExtendedRedPath:
    """The spine a1..ak; consecutive entries are adjacent in the tree."""

    vertices: Tuple[int, ...]
    origin: PathOrigin

    @property
    def k(self) -> int:
        return len(self.vertices)

    def reversed(self) -> "ExtendedRedPath":
        return ExtendedRedPath(tuple(reversed(self.vertices)), self.origin)


def _orient(t: Tree, path: Sequence[int]) -> Tuple[int, ...]:
    """Larger-degree endpoint first; ties go to the smaller id."""
    first, last = path[0], path[-1]
    key_first = (-len(t.adjacency[first]), first)
    key_last = (-len(t.adjacency[last]), last)
    return tuple(path) if key_first <= key_last else tuple(reversed(path))


def special_vertices(t: Tree) -> List[int]:
    """Vertices whose closed neighborhood contains every branch vertex."""
    branch = branch_vertices(t)
    found = []
    for v in range(t.n):
        closed = set(t.adjacency[v])
        closed.add(v)
        if branch <= closed:
            found.append(v)
    return found


def extended_red_path(t: Tree, outcome: RedPathOutcome) -> ExtendedRedPath:
    """
    Build the extended red path.

    Raises:
        ValueError: If outcome is NOT_A_PATH
        NoSpecialVertexError: If no red edge exists and no vertex's closed
            neighborhood covers all branch vertices
    """
    if outcome.kind is RedOutcomeKind.NOT_A_PATH:
        raise ValueError("extended_red_path needs a red path or no red edges")

    if outcome.kind is RedOutcomeKind.PATH:
        path = list(outcome.path)
        head, tail = path[0], path[-1]
        if len(t.adjacency[head]) == 2:
            path.insert(0, next(w for w in t.adjacency[head] if w != path[1]))
        if len(t.adjacency[tail]) == 2:
            path.append(next(w for w in t.adjacency[tail] if w != path[-2]))
        return ExtendedRedPath(_orient(t, path), PathOrigin.FROM_RED_PATH)

    candidates = special_vertices(t)
    if not candidates:
        raise NoSpecialVertexError(
            "No vertex has a closed neighborhood containing all branch vertices",
            context={"branch_vertices": sorted(branch_vertices(t))},
        )
    v = min(candidates, key=lambda c: (-len(t.adjacency[c]), c))
    if len(t.adjacency[v]) == 2:
        u, w = t.adjacency[v]
        return ExtendedRedPath(_orient(t, [u, v, w]), PathOrigin.NO_RED_EDGE_SPECIAL_VERTEX)
    return ExtendedRedPath((v,), PathOrigin.NO_RED_EDGE_SPECIAL_VERTEX)


@dataclass(frozen=True)
class Tails:
    """The two pendant paths of an agent, listed outward from the agent."""

    long: Tuple[int, ...]
    short: Tuple[int, ...]

    def __iter__(self) -> Iterator[Tuple[int, ...]]:
        return iter((self.long, self.short))


@dataclass(frozen=True)
class Decomposition:
    """
    Red vertices, their agents and the agents' tails.

    ``agents`` maps each red vertex to its agents (ascending ids); ``owner``
    maps an agent to the index (0-based) of its red vertex on the path.
    """

    path: ExtendedRedPath
    agents: Dict[int, Tuple[int, ...]]
    tails: Dict[int, Tails]
    owner: Dict[int, int]

    @property
    def red(self) -> Tuple[int, ...]:
        return self.path.vertices

    def associates(self, index: int) -> Tuple[int, ...]:
        """a_index together with its agents and all their tail vertices."""
        red = self.path.vertices[index]
        found = [red]
        for z in self.agents[red]:
            found.append(z)
            found.extend(self.tails[z].long)
            found.extend(self.tails[z].short)
        return tuple(found)

    def tail_vertices(self) -> FrozenSet[int]:
        return frozenset(v for tails in self.tails.values() for p in tails for v in p)

    def to_document(self) -> DecompositionDocument:
        return DecompositionDocument(
            origin=self.path.origin.value,
            path=list(self.path.vertices),
            agents=[AgentEntry(red=r, agents=list(self.agents[r])) for r in self.path.vertices],
            tails=[
                TailEntry(agent=z, long=list(self.tails[z].long), short=list(self.tails[z].short))
                for z in sorted(self.tails)
            ],
        )

    def reversed(self) -> "Decomposition":
        k = self.path.k
        return Decomposition(
            path=self.path.reversed(),
            agents=self.agents,
            tails=self.tails,
            owner={z: k - 1 - i for z, i in self.owner.items()},
        )


def decompose(t: Tree, a: ExtendedRedPath) -> Decomposition:
    """
    Split V(T) into red vertices, agents and tails.

    Raises:
        MalformedPeripheryError: If a branch vertex is neither red nor an
            agent, or an agent has more than two pendant paths
    """
    red = set(a.vertices)
    agents: Dict[int, Tuple[int, ...]] = {}
    owner: Dict[int, int] = {}
    for i, r in enumerate(a.vertices):
        found = tuple(sorted(w for w in t.adjacency[r] if w not in red))
        agents[r] = found
        for z in found:
            owner[z] = i

    tails: Dict[int, Tails] = {}
    for z, i in owner.items():
        red_vertex = a.vertices[i]
        starts = [w for w in t.adjacency[z] if w != red_vertex]
        if len(starts) > 2:
            raise MalformedPeripheryError(
                f"Agent {z} has {len(starts)} pendant branches",
                vertex=z,
            )
        paths = [_follow_tail(t, z, w, red, owner) for w in starts]
        while len(paths) < 2:
            paths.append(())
        first, second = paths
        if len(second) > len(first) or (
            len(second) == len(first) and second and first and second[0] < first[0]
        ):
            first, second = second, first
        tails[z] = Tails(long=first, short=second)

    decomposition = Decomposition(path=a, agents=agents, tails=tails, owner=owner)
    covered = len(red) + len(owner) + len(decomposition.tail_vertices())
    if covered != t.n:
        raise MalformedPeripheryError(
            f"Decomposition covers {covered} of {t.n} vertices",
            context={"covered": covered},
        )
    return decomposition


def _follow_tail(
    t: Tree,
    agent: int,
    start: int,
    red: set,
    owner: Dict[int, int],
) -> Tuple[int, ...]:
    tail = []
    previous, current = agent, start
    while True:
        if current in red or current in owner:
            raise MalformedPeripheryError(
                f"Tail of agent {agent} runs into the spine at {current}",
                vertex=current,
            )
        nbrs = t.adjacency[current]
        if len(nbrs) > 2:
            raise MalformedPeripheryError(
                f"Branch vertex {current} is neither red nor adjacent to a red vertex",
                vertex=current,
            )
        tail.append(current)
        onward = [w for w in nbrs if w != previous]
        if not onward:
            return tuple(tail)
        previous, current = current, onward[0]
