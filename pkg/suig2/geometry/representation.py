"""
Unit-square representations on two stab lines.

A vertex is *lower* when its square meets the line y = 1 (y in [0, 1]) and
*upper* when it meets y = 2 + epsilon (y in [1 + epsilon, 2 + epsilon]).
Squares are closed, so boundary contact is adjacency.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import islice
from operator import le
from typing import Callable, Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

import networkx as nx

from suig2.core.exceptions import DisconnectedProjectionError
from suig2.core.logging import get_logger
from suig2.geometry.rationals import DEFAULT_CLAW_CONSTANT, Number, ceil_half, normalize
from suig2.trees.tree import Edge, Tree, edge_key

logger = get_logger(__name__)


class Stab(str, Enum):
    LOWER = "lower"
    UPPER = "upper"

    @property
    def other(self) -> "Stab":
        return Stab.UPPER if self is Stab.LOWER else Stab.LOWER


@dataclass(frozen=True)
class Square:
    x: Number
    y: Number
    stab: Stab


@dataclass(frozen=True)
class Representation:
    """
    Exact square coordinates for a set of vertices.

    Coordinates live in parallel tuples; ``vertices[i]`` owns ``xs[i]``,
    ``ys[i]`` and ``stabs[i]``. Representations of whole trees use
    ``range(n)`` so that position and vertex id coincide.
    """

    epsilon: Fraction
    vertices: Sequence[int]
    xs: Tuple[Number, ...]
    ys: Tuple[Number, ...]
    stabs: Tuple[Stab, ...]
    _index: Optional[Dict[int, int]] = field(default=None, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not (len(self.vertices) == len(self.xs) == len(self.ys) == len(self.stabs)):
            raise ValueError("vertices, xs, ys and stabs must have equal length")
        if not isinstance(self.vertices, range) or self.vertices.start != 0 or self.vertices.step != 1:
            object.__setattr__(self, "_index", {v: i for i, v in enumerate(self.vertices)})

    @classmethod
    def from_squares(cls, epsilon: Fraction, squares: Mapping[int, Square]) -> "Representation":
        order = sorted(squares)
        if order == list(range(len(order))):
            vertices: Sequence[int] = range(len(order))
        else:
            vertices = tuple(order)
        return cls(
            epsilon=Fraction(epsilon),
            vertices=vertices,
            xs=tuple(normalize(squares[v].x) for v in order),
            ys=tuple(normalize(squares[v].y) for v in order),
            stabs=tuple(squares[v].stab for v in order),
        )

    @classmethod
    def empty(cls, epsilon: Fraction) -> "Representation":
        return cls(epsilon=Fraction(epsilon), vertices=range(0), xs=(), ys=(), stabs=())

    def __len__(self) -> int:
        return len(self.xs)

    def __contains__(self, v: object) -> bool:
        if self._index is None:
            return isinstance(v, int) and 0 <= v < len(self.xs)
        return v in self._index

    def position(self, v: int) -> int:
        if self._index is None:
            if not 0 <= v < len(self.xs):
                raise KeyError(v)
            return v
        return self._index[v]

    def square(self, v: int) -> Square:
        i = self.position(v)
        return Square(self.xs[i], self.ys[i], self.stabs[i])

    def squares(self) -> Iterator[Tuple[int, Square]]:
        for i, v in enumerate(self.vertices):
            yield v, Square(self.xs[i], self.ys[i], self.stabs[i])

    def translate(self, dx: Number, dy: Number = 0) -> "Representation":
        """
        Shift every square. A vertical shift must keep the stab boxes valid;
        verify() reports it otherwise.
        """
        return Representation(
            epsilon=self.epsilon,
            vertices=self.vertices,
            xs=tuple(normalize(x + dx) for x in self.xs),
            ys=tuple(normalize(y + dy) for y in self.ys),
            stabs=self.stabs,
        )

    def reflect(self) -> "Representation":
        """
        Mirror across the line halfway between the stab lines; stabs swap and
        every adjacency is kept.
        """
        return Representation(
            epsilon=self.epsilon,
            vertices=self.vertices,
            xs=self.xs,
            ys=tuple(normalize(_reflect_y(y, self.epsilon)) for y in self.ys),
            stabs=tuple(s.other for s in self.stabs),
        )


def _reflect_y(y: Number, epsilon: Fraction) -> Number:
    # [y, y+1] mirrored around y = (3 + epsilon) / 2
    return 2 + epsilon - y


def _sorted_positions(xs: Sequence[Number]) -> Sequence[int]:
    n = len(xs)
    if all(map(le, xs, islice(xs, 1, None))):
        return range(n)
    return sorted(range(n), key=xs.__getitem__)


def touching_pairs(r: Representation) -> Iterator[Tuple[int, int]]:
    """
    Yield every intersecting pair of squares as vertex ids, by a sweep over x.

    Two closed unit squares meet iff |dx| <= 1 and |dy| <= 1.
    """
    xs, ys, vertices = r.xs, r.ys, r.vertices
    order = _sorted_positions(xs)
    count = len(order)
    for a in range(count):
        i = order[a]
        xi, yi = xs[i], ys[i]
        limit = xi + 1
        b = a + 1
        while b < count:
            j = order[b]
            if xs[j] > limit:
                break
            dy = ys[j] - yi
            if -1 <= dy <= 1:
                yield vertices[i], vertices[j]
            b += 1


def intersection_graph(r: Representation) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(r.vertices)
    graph.add_edges_from(touching_pairs(r))
    return graph


@dataclass(frozen=True)
class StabViolation:
    vertex: int

    def __str__(self) -> str:
        return f"StabViolation {self.vertex}"


@dataclass(frozen=True)
class MissingEdge:
    u: int
    v: int

    def __str__(self) -> str:
        return f"MissingEdge {self.u} {self.v}"


@dataclass(frozen=True)
class ExtraEdge:
    u: int
    v: int

    def __str__(self) -> str:
        return f"ExtraEdge {self.u} {self.v}"


@dataclass(frozen=True)
class UncoveredVertex:
    vertex: int

    def __str__(self) -> str:
        return f"UncoveredVertex {self.vertex}"


Violation = Union[StabViolation, MissingEdge, ExtraEdge, UncoveredVertex]


@dataclass(frozen=True)
class VerifyReport:
    violations: Tuple[Violation, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.violations

    def lines(self) -> List[str]:
        return [str(v) for v in self.violations]

    def of_type(self, kind: type) -> List[Violation]:
        return [v for v in self.violations if isinstance(v, kind)]


def verify(r: Representation, graph: Union[Tree, nx.Graph]) -> VerifyReport:
    """
    Check the stab boxes and that the intersection graph equals ``graph``.

    Trees are checked without building a networkx graph; the sweep counts
    the tree edges it meets, and only a failing count triggers the slower
    search for the missing ones.
    """
    violations: List[Violation] = []
    all_edges: Callable[[], Iterable[Edge]]
    if isinstance(graph, Tree):
        vertex_set: Iterable[int] = range(graph.n)
        edge_count = graph.n - 1
        all_edges = lambda: graph.edges  # noqa: E731
    else:
        vertex_set = graph.nodes
        edge_count = graph.number_of_edges()
        all_edges = lambda: (edge_key(u, v) for u, v in graph.edges)  # noqa: E731

    if not (isinstance(graph, Tree) and r.vertices == range(graph.n)):
        uncovered = [v for v in vertex_set if v not in r]
        if uncovered:
            violations.extend(UncoveredVertex(v) for v in sorted(uncovered))
            return VerifyReport(tuple(violations))
        if len(r) != (graph.n if isinstance(graph, Tree) else graph.number_of_nodes()):
            known = set(vertex_set)
            violations.extend(UncoveredVertex(v) for v in sorted(r.vertices) if v not in known)
            return VerifyReport(tuple(violations))

    lower, top, floor = Stab.LOWER, 2 + r.epsilon, 1 + r.epsilon
    violations.extend(
        StabViolation(v)
        for v, y, stab in zip(r.vertices, r.ys, r.stabs)
        if not ((0 <= y <= 1) if stab is lower else (floor <= y <= top))
    )

    if isinstance(graph, Tree):
        found, extra = _sweep_tree(r, graph.adjacency)
    else:
        found, extra = _sweep_graph(r, graph)
    if found != edge_count:
        seen = {edge_key(u, v) for u, v in touching_pairs(r)}
        violations.extend(MissingEdge(u, v) for u, v in sorted(all_edges()) if (u, v) not in seen)
    violations.extend(sorted(extra, key=lambda e: (e.u, e.v)))

    report = VerifyReport(tuple(violations))
    if not report.passed:
        logger.debug(f"Verification failed with {len(violations)} violations")
    return report


def _sweep_tree(r: Representation, adjacency: Sequence[Sequence[int]]) -> Tuple[int, List[ExtraEdge]]:
    """The touching_pairs sweep, inlined for the tree case."""
    xs, ys, vertices = r.xs, r.ys, r.vertices
    order = _sorted_positions(xs)
    count = len(order)
    found = 0
    extra: List[ExtraEdge] = []
    for a in range(count):
        i = order[a]
        yi = ys[i]
        limit = xs[i] + 1
        u = vertices[i]
        around = adjacency[u]
        b = a + 1
        while b < count:
            j = order[b]
            if xs[j] > limit:
                break
            if -1 <= ys[j] - yi <= 1:
                v = vertices[j]
                if v in around:
                    found += 1
                else:
                    extra.append(ExtraEdge(*edge_key(u, v)))
            b += 1
    return found, extra


def _sweep_graph(r: Representation, graph: nx.Graph) -> Tuple[int, List[ExtraEdge]]:
    found = 0
    extra: List[ExtraEdge] = []
    for u, v in touching_pairs(r):
        if graph.has_edge(u, v):
            found += 1
        else:
            extra.append(ExtraEdge(*edge_key(u, v)))
    return found, extra


def span(r: Representation, vertices: Iterable[int]) -> Number:
    """
    Length of the union of the x-projections [x_v, x_v + 1].

    Raises:
        DisconnectedProjectionError: If the projections leave a gap
    """
    xs = sorted(r.xs[r.position(v)] for v in vertices)
    if not xs:
        return 0
    reach = xs[0] + 1
    for x in xs[1:]:
        if x > reach:
            raise DisconnectedProjectionError(
                f"Projection has a gap between {reach} and {x}",
                context={"gap_start": str(reach), "gap_end": str(x)},
            )
        reach = max(reach, x + 1)
    return normalize(reach - xs[0])


class PathKind(str, Enum):
    LOWER_RIGHT = "lower-right"
    UPPER_RIGHT = "upper-right"
    LOWER_LEFT = "lower-left"
    UPPER_LEFT = "upper-left"
    FOLDED = "folded"
    MIXED = "mixed"


_MONOTONE_KINDS = {
    (Stab.LOWER, 1): PathKind.LOWER_RIGHT,
    (Stab.UPPER, 1): PathKind.UPPER_RIGHT,
    (Stab.LOWER, -1): PathKind.LOWER_LEFT,
    (Stab.UPPER, -1): PathKind.UPPER_LEFT,
}


@dataclass(frozen=True)
class PathClassification:
    kind: PathKind
    stretched: bool
    shrinked: bool

    @property
    def monotone(self) -> bool:
        return self.kind not in (PathKind.FOLDED, PathKind.MIXED)


def classify_path(
    r: Representation,
    path: Sequence[int],
    c: Fraction = DEFAULT_CLAW_CONSTANT,
) -> PathClassification:
    """
    Classify an ordered path by stab and x-order.

    Monotone kinds need one shared stab and strictly ordered x along the
    path. A path is folded when some inner vertex lies strictly left (or
    strictly right) of every other vertex of the path.
    """
    k = len(path)
    squares = [r.square(v) for v in path]
    xs = [s.x for s in squares]

    kind = PathKind.MIXED
    if k and all(s.stab is squares[0].stab for s in squares):
        if all(xs[i] < xs[i + 1] for i in range(k - 1)):
            kind = _MONOTONE_KINDS[(squares[0].stab, 1)]
        elif all(xs[i] > xs[i + 1] for i in range(k - 1)):
            kind = _MONOTONE_KINDS[(squares[0].stab, -1)]
    if kind is PathKind.MIXED:
        for i in range(1, k - 1):
            others = xs[:i] + xs[i + 1:]
            if all(xs[i] < x for x in others) or all(xs[i] > x for x in others):
                kind = PathKind.FOLDED
                break

    try:
        width = span(r, path)
    except DisconnectedProjectionError:
        return PathClassification(kind, False, False)
    return PathClassification(
        kind=kind,
        stretched=width == k,
        shrinked=k >= 1 and width == ceil_half(k) + c,
    )
