"""
Exact difference-constraint feasibility.

Constraints read ``left - right <= bound`` (or ``<`` when strict). Strict
bounds are carried as lexicographic weights ``(bound, -1)``: a rational
part plus a count of an infinitesimal delta. Shortest paths over these
weights decide feasibility exactly; a concrete delta is picked only when
the solution is turned into rationals.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple, Union

from suig2.core.logging import get_logger
from suig2.geometry.rationals import Number

logger = get_logger(__name__)

Weight = Tuple[Fraction, int]

_ZERO: Weight = (Fraction(0), 0)


@dataclass(frozen=True)
class DifferenceConstraint:
    left: Hashable
    right: Hashable
    bound: Fraction
    strict: bool = False

    @property
    def weight(self) -> Weight:
        return (self.bound, -1 if self.strict else 0)

    def holds(self, values: Dict[Hashable, Number]) -> bool:
        diff = values[self.left] - values[self.right]
        return diff < self.bound if self.strict else diff <= self.bound

    def __str__(self) -> str:
        op = "<" if self.strict else "<="
        return f"{self.left} - {self.right} {op} {self.bound}"


class DifferenceSystem:
    """
    A mutable set of difference constraints over hashable variable names.

    Systems are cheap to copy, which the branching searches rely on.
    """

    def __init__(self, variables: Iterable[Hashable] = ()) -> None:
        self.variables: List[Hashable] = []
        self._index: Dict[Hashable, int] = {}
        self.constraints: List[DifferenceConstraint] = []
        for v in variables:
            self.add_variable(v)

    def add_variable(self, v: Hashable) -> None:
        if v not in self._index:
            self._index[v] = len(self.variables)
            self.variables.append(v)

    def add(self, left: Hashable, right: Hashable, bound: Number, strict: bool = False) -> None:
        """Add ``left - right <= bound`` (``<`` when strict)."""
        self.add_variable(left)
        self.add_variable(right)
        self.constraints.append(DifferenceConstraint(left, right, Fraction(bound), strict))

    def add_equal(self, left: Hashable, right: Hashable, value: Number) -> None:
        """Add ``left - right == value``."""
        self.add(left, right, value)
        self.add(right, left, -Fraction(value))

    def add_between(self, var: Hashable, anchor: Hashable, low: Number, high: Number) -> None:
        """Add ``low <= var - anchor <= high``."""
        self.add(var, anchor, high)
        self.add(anchor, var, -Fraction(low))

    def copy(self) -> "DifferenceSystem":
        clone = DifferenceSystem()
        clone.variables = list(self.variables)
        clone._index = dict(self._index)
        clone.constraints = list(self.constraints)
        return clone

    def __len__(self) -> int:
        return len(self.constraints)

    def __contains__(self, v: object) -> bool:
        return v in self._index


@dataclass(frozen=True)
class Feasible:
    values: Dict[Hashable, Fraction]
    symbolic: Dict[Hashable, Weight] = field(repr=False)
    delta: Fraction = Fraction(0)


@dataclass(frozen=True)
class Infeasible:
    """A negative cycle: its weights sum below zero, or to zero with a strict edge."""

    cycle: Tuple[DifferenceConstraint, ...]

    @property
    def total(self) -> Weight:
        a = sum((c.bound for c in self.cycle), Fraction(0))
        b = sum(-1 if c.strict else 0 for c in self.cycle)
        return (a, b)


Solution = Union[Feasible, Infeasible]


def _add(w1: Weight, w2: Weight) -> Weight:
    return (w1[0] + w2[0], w1[1] + w2[1])


def _shortest(
    size: int,
    edges: Sequence[Tuple[int, int, Weight, int]],
    sources: Sequence[int],
) -> Tuple[List[Optional[Weight]], Optional[List[int]]]:
    """
    Bellman-Ford from several zero-distance sources.

    Returns distances (None when unreachable) and, on a negative cycle, the
    indices of the edges forming it.
    """
    dist: List[Optional[Weight]] = [None] * size
    pred: List[int] = [-1] * size
    for s in sources:
        dist[s] = _ZERO
    last_relaxed = -1
    for _ in range(size):
        last_relaxed = -1
        for e, (u, v, w, _cid) in enumerate(edges):
            du = dist[u]
            if du is None:
                continue
            candidate = _add(du, w)
            dv = dist[v]
            if dv is None or candidate < dv:
                dist[v] = candidate
                pred[v] = e
                last_relaxed = v
        if last_relaxed == -1:
            return dist, None

    # Walk back far enough to land on the cycle, then collect it.
    v = last_relaxed
    for _ in range(size):
        v = edges[pred[v]][0]
    cycle: List[int] = []
    u = v
    while True:
        e = pred[u]
        cycle.append(e)
        u = edges[e][0]
        if u == v:
            break
    cycle.reverse()
    return dist, cycle


def solve_difference_system(
    ds: DifferenceSystem,
    anchor: Optional[Hashable] = None,
    chain: int = 1,
) -> Solution:
    """
    Decide feasibility and return exact values or a negative-cycle witness.

    With an anchor whose value is pinned to 0, the pointwise smallest
    solution is returned, provided every variable is bounded below through
    the anchor; otherwise any feasible solution is returned. Strict
    constraints keep a slack of at least the chosen delta, which is at most
    1 / (4 * |variables| * chain). Callers that solve ``chain`` systems in
    sequence, each pinned to the last one's values, keep the stacked slack
    below 1/4 that way.
    """
    if chain < 1:
        raise ValueError("chain must be at least 1")
    size = len(ds.variables)
    if size == 0:
        return Feasible(values={}, symbolic={})
    index = ds._index
    # x_left <= x_right + w  is the edge right -> left
    forward = [
        (index[c.right], index[c.left], c.weight, i) for i, c in enumerate(ds.constraints)
    ]

    dist, cycle = _shortest(size, forward, list(range(size)))
    if cycle is not None:
        witness = tuple(ds.constraints[forward[e][3]] for e in cycle)
        logger.debug(f"Infeasible system: negative cycle of {len(witness)} constraints")
        return Infeasible(witness)

    symbolic: List[Weight] = [d if d is not None else _ZERO for d in dist]
    if anchor is not None and anchor in index:
        a = index[anchor]
        backward = [(v, u, w, cid) for u, v, w, cid in forward]
        reach, _ = _shortest(size, backward, [a])
        if all(r is not None for r in reach):
            symbolic = [(-r[0], -r[1]) for r in reach]  # type: ignore[index]
        base = symbolic[a]
        symbolic = [(s[0] - base[0], s[1] - base[1]) for s in symbolic]

    delta = _choose_delta(ds, symbolic, chain)
    values = {
        v: symbolic[i][0] + symbolic[i][1] * delta for i, v in enumerate(ds.variables)
    }
    return Feasible(
        values=values,
        symbolic={v: symbolic[i] for i, v in enumerate(ds.variables)},
        delta=delta,
    )


def _choose_delta(ds: DifferenceSystem, symbolic: Sequence[Weight], chain: int) -> Fraction:
    """Largest power of 1/2 that keeps every constraint satisfied."""
    limit = Fraction(1, 4 * len(ds.variables) * chain)
    index = ds._index
    for c in ds.constraints:
        left, right = symbolic[index[c.left]], symbolic[index[c.right]]
        gap = c.bound - (left[0] - right[0])
        coefficient = (left[1] - right[1]) + (1 if c.strict else 0)
        if gap > 0 and coefficient > 0:
            limit = min(limit, gap / coefficient)
    delta = Fraction(1)
    while delta > limit:
        delta /= 2
    return delta


def check_solution(ds: DifferenceSystem, values: Dict[Hashable, Number]) -> List[DifferenceConstraint]:
    """Constraints the values violate (empty when they are a solution)."""
    return [c for c in ds.constraints if not c.holds(values)]
