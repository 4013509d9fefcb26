"""
Brute-force 2SUIG feasibility straight from the definition.

Stab assignments are enumerated with vertex 0 lower. For each complete
assignment the x- and y-coordinates are two independent difference
systems: edges bound |dx| <= 1 (and, across stabs, y_upper - y_lower <= 1),
stab boxes bound y. Non-edges are disjunctions, handled lazily: solve,
find a pair of non-adjacent squares that touch, and branch on the ways to
pull them apart. The search is exhaustive, so a reject is a proof.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, Hashable, List, Optional, Sequence, Set, Tuple, Union

import networkx as nx

from suig2.core.budget import Deadline
from suig2.core.exceptions import InternalError, TooLargeError
from suig2.core.logging import get_logger
from suig2.geometry.rationals import DEFAULT_EPSILON
from suig2.geometry.representation import Representation, Square, Stab, verify
from suig2.oracle.difference import (
    DifferenceSystem,
    Feasible,
    solve_difference_system,
)
from suig2.schemas.documents import DecisionName
from suig2.trees.tree import Tree, to_networkx

logger = get_logger(__name__)

ORACLE_HARD_CAP = 12

X_ANCHOR = ("x", "*")
Y_ANCHOR = ("y", "*")


@dataclass(frozen=True)
class SearchConfig:
    max_n: int = 9
    epsilon: Fraction = DEFAULT_EPSILON
    time_budget: Optional[float] = None

    def __post_init__(self) -> None:
        if not 0 <= self.max_n <= ORACLE_HARD_CAP:
            raise ValueError(f"max_n must lie in 0..{ORACLE_HARD_CAP}, got {self.max_n}")
        if not 0 < self.epsilon < 1:
            raise ValueError(f"epsilon must lie in (0, 1), got {self.epsilon}")
        if self.time_budget is not None and self.time_budget <= 0:
            raise ValueError("time_budget must be positive")


@dataclass
class SearchStats:
    assignments: int = 0
    complete_assignments: int = 0
    nodes: int = 0
    solver_calls: int = 0

    def as_dict(self) -> Dict[str, int]:
        return {
            "assignments": self.assignments,
            "complete_assignments": self.complete_assignments,
            "nodes": self.nodes,
            "solver_calls": self.solver_calls,
        }


@dataclass(frozen=True)
class OracleResult:
    """Accept carries a verified representation; Reject means the search was exhausted."""

    accepted: bool
    representation: Optional[Representation]
    stats: SearchStats = field(compare=False)

    @property
    def decision(self) -> DecisionName:
        return DecisionName.ACCEPT if self.accepted else DecisionName.REJECT


def _x(v: int) -> Hashable:
    return ("x", v)


def _y(v: int) -> Hashable:
    return ("y", v)


def _independent_triple(candidates: Sequence[int], adj: Sequence[Set[int]]) -> bool:
    if len(candidates) < 3:
        return False
    return any(
        b not in adj[a] and c not in adj[a] and c not in adj[b]
        for a, b, c in combinations(candidates, 3)
    )


class _Search:
    def __init__(self, n: int, adj: List[Set[int]], cfg: SearchConfig, deadline: Deadline) -> None:
        self.n = n
        self.adj = adj
        self.cfg = cfg
        self.deadline = deadline
        self.stats = SearchStats()
        self.order = self._bfs_order()
        self.roots = self._component_roots()
        self.non_edges = [(u, v) for u, v in combinations(range(n), 2) if v not in adj[u]]

    def _bfs_order(self) -> List[int]:
        order: List[int] = []
        seen = [False] * self.n
        for root in range(self.n):
            if seen[root]:
                continue
            seen[root] = True
            queue = [root]
            for u in queue:
                order.append(u)
                for w in sorted(self.adj[u]):
                    if not seen[w]:
                        seen[w] = True
                        queue.append(w)
        return order

    def _component_roots(self) -> List[int]:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from((u, v) for u in range(self.n) for v in self.adj[u] if u < v)
        return sorted(min(component) for component in nx.connected_components(graph))

    def _locally_valid(self, stabs: Dict[int, Stab], v: int) -> bool:
        """No vertex may see three pairwise non-adjacent neighbors in one stab."""
        for w in [v, *(u for u in self.adj[v] if u in stabs)]:
            same = [u for u in self.adj[w] if u in stabs and stabs[u] is stabs[w]]
            cross = [u for u in self.adj[w] if u in stabs and stabs[u] is not stabs[w]]
            if _independent_triple(same, self.adj) or _independent_triple(cross, self.adj):
                return False
        return True

    def run(self) -> Optional[Tuple[Dict[int, Stab], Dict[Hashable, Fraction]]]:
        stabs: Dict[int, Stab] = {}
        return self._assign(0, stabs)

    def _assign(self, depth: int, stabs: Dict[int, Stab]):  # type: ignore[no-untyped-def]
        self.deadline.check("oracle stab assignment")
        if depth == self.n:
            self.stats.complete_assignments += 1
            found = self._realize(stabs)
            return (dict(stabs), found) if found is not None else None
        v = self.order[depth]
        choices = (Stab.LOWER,) if depth == 0 else (Stab.LOWER, Stab.UPPER)
        for stab in choices:
            stabs[v] = stab
            self.stats.assignments += 1
            if self._locally_valid(stabs, v):
                result = self._assign(depth + 1, stabs)
                if result is not None:
                    return result
            del stabs[v]
        return None

    def _base_systems(self, stabs: Dict[int, Stab]) -> Tuple[DifferenceSystem, DifferenceSystem]:
        eps = self.cfg.epsilon
        xs = DifferenceSystem([X_ANCHOR])
        ys = DifferenceSystem([Y_ANCHOR])
        for i, r in enumerate(self.roots):
            if i == 0:
                xs.add_equal(_x(r), X_ANCHOR, 0)
            else:
                xs.add_between(_x(r), X_ANCHOR, -4 * self.n, 4 * self.n)
        for v in range(self.n):
            if stabs[v] is Stab.LOWER:
                ys.add_between(_y(v), Y_ANCHOR, 0, 1)
            else:
                ys.add_between(_y(v), Y_ANCHOR, 1 + eps, 2 + eps)
            for u in self.adj[v]:
                if u > v:
                    xs.add(_x(u), _x(v), 1)
                    xs.add(_x(v), _x(u), 1)
                    if stabs[u] is not stabs[v]:
                        up, low = (u, v) if stabs[u] is Stab.UPPER else (v, u)
                        ys.add(_y(up), _y(low), 1)
        return xs, ys

    def _solve(self, ds: DifferenceSystem, anchor: Hashable) -> Optional[Feasible]:
        self.stats.solver_calls += 1
        solution = solve_difference_system(ds, anchor=anchor)
        return solution if isinstance(solution, Feasible) else None

    def _realize(self, stabs: Dict[int, Stab]) -> Optional[Dict[Hashable, Fraction]]:
        xs, ys = self._base_systems(stabs)
        x_sol = self._solve(xs, X_ANCHOR)
        y_sol = self._solve(ys, Y_ANCHOR) if x_sol is not None else None
        if x_sol is None or y_sol is None:
            return None
        return self._branch(stabs, xs, ys, x_sol, y_sol)

    def _branch(
        self,
        stabs: Dict[int, Stab],
        xs: DifferenceSystem,
        ys: DifferenceSystem,
        x_sol: Feasible,
        y_sol: Feasible,
    ) -> Optional[Dict[Hashable, Fraction]]:
        self.stats.nodes += 1
        self.deadline.check("oracle separation search")
        X, Y = x_sol.values, y_sol.values
        clash = None
        for u, v in self.non_edges:
            if abs(X[_x(u)] - X[_x(v)]) <= 1 and abs(Y[_y(u)] - Y[_y(v)]) <= 1:
                clash = (u, v)
                break
        if clash is None:
            merged = dict(X)
            merged.update(Y)
            return merged

        u, v = clash
        left, right = (u, v) if X[_x(u)] <= X[_x(v)] else (v, u)
        for a, b in ((left, right), (right, left)):
            branch = xs.copy()
            branch.add(_x(a), _x(b), -1, strict=True)
            solved = self._solve(branch, X_ANCHOR)
            if solved is not None:
                found = self._branch(stabs, branch, ys, solved, y_sol)
                if found is not None:
                    return found
        if stabs[u] is not stabs[v]:
            up, low = (u, v) if stabs[u] is Stab.UPPER else (v, u)
            branch = ys.copy()
            branch.add(_y(low), _y(up), -1, strict=True)
            solved = self._solve(branch, Y_ANCHOR)
            if solved is not None:
                return self._branch(stabs, xs, branch, x_sol, solved)
        return None


def brute_force_2suig(
    graph: Union[Tree, nx.Graph],
    cfg: Optional[SearchConfig] = None,
    deadline: Optional[Deadline] = None,
) -> OracleResult:
    """
    Decide 2SUIG membership by exhaustive search.

    Raises:
        TooLargeError: If the graph has more than cfg.max_n vertices
        BudgetExceededError: If the time budget runs out first
    """
    cfg = cfg or SearchConfig()
    if isinstance(graph, Tree):
        graph = to_networkx(graph)
    labels = sorted(graph.nodes())
    n = len(labels)
    if n > cfg.max_n:
        raise TooLargeError(n, cfg.max_n)
    deadline = deadline or Deadline(cfg.time_budget)
    if n == 0:
        return OracleResult(True, Representation.empty(cfg.epsilon), SearchStats())

    position = {label: i for i, label in enumerate(labels)}
    adj: List[Set[int]] = [set() for _ in range(n)]
    for a, b in graph.edges():
        adj[position[a]].add(position[b])
        adj[position[b]].add(position[a])

    search = _Search(n, adj, cfg, deadline)
    found = search.run()
    logger.debug(
        f"Oracle search on {n} vertices finished",
        extra=search.stats.as_dict(),
    )
    if found is None:
        return OracleResult(False, None, search.stats)

    stabs, values = found
    squares = {
        labels[v]: Square(values[_x(v)], values[_y(v)], stabs[v]) for v in range(n)
    }
    representation = Representation.from_squares(cfg.epsilon, squares)
    report = verify(representation, graph)
    if not report.passed:
        raise InternalError(
            "Oracle produced a representation that fails verification",
            context={"violations": report.lines()[:5]},
        )
    return OracleResult(True, representation, search.stats)
