"""
Turn a stage candidate into exact squares.

A candidate fixes stabs, corner sides and tail directions; what is left
is a pair of difference systems over x and y. A tail is a rigid block:
only its head gets an x variable, the rest sit at fixed shrinked offsets
from it. Committed squares enter the systems only when a new square is
adjacent to them or collides with them, and are looked up through the
canvas index, so a stage costs the same however much is already placed.
Non-edges are disjunctions and are resolved lazily the way the oracle
does it, under a node budget.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Hashable, Mapping, Optional, Set, Tuple, Union

from suig2.core.logging import get_logger
from suig2.geometry.rationals import Number, shrinked_offsets
from suig2.geometry.representation import Square, Stab
from suig2.oracle.difference import DifferenceSystem, Feasible, solve_difference_system
from suig2.recognizer.state import LEFT, Canvas, StageChoice, TailSlot
from suig2.trees.red import Decomposition
from suig2.trees.tree import Tree, edge_key

logger = get_logger(__name__)

X_ANCHOR = ("x", "*")
Y_ANCHOR = ("y", "*")

GEOMETRY = "geometry"
SEARCH_BUDGET = "search-budget"


def _x(v: int) -> Hashable:
    return ("x", v)


def _y(v: int) -> Hashable:
    return ("y", v)


@dataclass(frozen=True)
class Realized:
    """
    The squares a candidate adds, not yet committed.

    ``extent`` is the largest x over the red vertex's associates.
    """

    fresh: Mapping[int, Square]
    extent: Number


@dataclass(frozen=True)
class Unrealizable:
    label: str


Realization = Union[Realized, Unrealizable]


class _OutOfNodes(Exception):
    pass


class Realizer:
    """
    Realizes candidates against a canvas of committed squares.

    Every stage pins its squares to the ones before it, so strict slack
    can stack along the red path; the solver's delta is scaled by the
    number of stages to keep that drift below 1/4 of a stab box.
    """

    def __init__(
        self,
        t: Tree,
        decomposition: Decomposition,
        epsilon: Fraction,
        claw_constant: Fraction,
        node_budget: int,
    ) -> None:
        self.t = t
        self.d = decomposition
        self.epsilon = epsilon
        self.claw_constant = claw_constant
        self.node_budget = node_budget
        self.chain = decomposition.path.k + 1
        self.solver_calls = 0

    @staticmethod
    def red_x(index: int) -> int:
        return index + 1

    def box(self, stab: Stab) -> Tuple[Number, Number]:
        if stab is Stab.LOWER:
            return 0, 1
        return 1 + self.epsilon, 2 + self.epsilon

    def realize(self, canvas: Canvas, choice: StageChoice) -> Realization:
        scope = _Scope(self, canvas)
        scope.lay_out(choice)
        search = _Separation(scope)
        try:
            found = search.run()
        except _OutOfNodes:
            logger.debug(
                f"Realizing a{choice.index + 1} ran out of nodes",
                extra={"nodes": search.nodes, "budget": self.node_budget},
            )
            return Unrealizable(SEARCH_BUDGET)
        if found is None:
            return Unrealizable(GEOMETRY)

        fresh = {v: Square(x, y, scope.stabs[v]) for v, (x, y) in found.items()}
        extent = max(fresh[v].x for v in self.d.associates(choice.index))
        return Realized(fresh=fresh, extent=extent)


class _Scope:
    """
    The new squares of one candidate and the terms their coordinates map to.

    A tail body vertex maps to its head's x variable plus an offset. Its y
    sits at the bottom of its stab box until a collision needs it to move,
    and only then gets a variable of its own.
    """

    def __init__(self, owner: Realizer, canvas: Canvas) -> None:
        self.owner = owner
        self.canvas = canvas
        self.stabs: Dict[int, Stab] = {}
        self.body: Dict[int, Tuple[int, Number]] = {}
        self.edges: Set[Tuple[int, int]] = set()
        self.xs = DifferenceSystem([X_ANCHOR])
        self.ys = DifferenceSystem([Y_ANCHOR])

    def lay_out(self, choice: StageChoice) -> None:
        owner, d = self.owner, self.owner.d
        xs = self.xs
        red = choice.red
        self.stabs[red] = choice.red_stab
        xs.add_equal(_x(red), X_ANCHOR, owner.red_x(choice.index))
        if choice.next_stab is not None:
            following = d.red[choice.index + 1]
            self.stabs[following] = choice.next_stab
            xs.add_equal(_x(following), X_ANCHOR, owner.red_x(choice.index + 1))

        for p in choice.placements:
            z = p.agent
            self.stabs[z] = p.corner.stab
            if p.corner.side == LEFT:
                xs.add_between(_x(z), _x(red), -1, 0)
            else:
                xs.add_between(_x(z), _x(red), 0, 1)
            tails = d.tails[z]
            for path, slot in ((tails.long, p.long_slot), (tails.short, p.short_slot)):
                if path:
                    self._tail(z, path, slot)

        for v, stab in self.stabs.items():
            if v not in self.body:
                low, high = owner.box(stab)
                self.ys.add_between(_y(v), Y_ANCHOR, low, high)
        self._edges()

    def _tail(self, agent: int, path: Tuple[int, ...], slot: TailSlot) -> None:
        offsets = shrinked_offsets(len(path), self.owner.claw_constant)
        head = path[0]
        if slot.direction == LEFT:
            self.xs.add_between(_x(head), _x(agent), -1, 0)
        else:
            self.xs.add_between(_x(head), _x(agent), 0, 1)
        for v, offset in zip(path, offsets):
            self.stabs[v] = slot.stab
            if v != head:
                self.body[v] = (head, slot.direction * offset)

    def _edges(self) -> None:
        adjacency = self.owner.t.adjacency
        for v in self.stabs:
            for u in adjacency[v]:
                if u in self.stabs:
                    if u < v:
                        continue
                elif u not in self.canvas:
                    continue
                self.edges.add(edge_key(u, v))
                if self.x_base(u) == self.x_base(v):
                    # neighbours inside one tail keep their offsets
                    continue
                self.add_x(self.xs, u, v, 1)
                self.add_x(self.xs, v, u, 1)
                su, sv = self.stab(u), self.stab(v)
                if su is not sv:
                    up, low = (u, v) if su is Stab.UPPER else (v, u)
                    self.add_y(self.ys, up, low, 1)

    def stab(self, v: int) -> Stab:
        if v in self.stabs:
            return self.stabs[v]
        return self.canvas.square(v).stab

    def x_base(self, v: int) -> int:
        return self.body[v][0] if v in self.body else v

    def _x_term(self, ds: DifferenceSystem, v: int) -> Tuple[Hashable, Number]:
        if v in self.body:
            head, offset = self.body[v]
            return _x(head), offset
        var = _x(v)
        if v not in self.stabs and var not in ds:
            ds.add_equal(var, X_ANCHOR, self.canvas.square(v).x)
        return var, 0

    def _y_term(self, ds: DifferenceSystem, v: int) -> Hashable:
        var = _y(v)
        if var in ds:
            return var
        if v in self.stabs:
            low, high = self.owner.box(self.stabs[v])
            ds.add_between(var, Y_ANCHOR, low, high)
        else:
            ds.add_equal(var, Y_ANCHOR, self.canvas.square(v).y)
        return var

    def add_x(self, ds: DifferenceSystem, u: int, v: int, bound: Number, strict: bool = False) -> None:
        """Add ``x_u - x_v <= bound`` (``<`` when strict)."""
        (a, oa), (b, ob) = self._x_term(ds, u), self._x_term(ds, v)
        ds.add(a, b, bound - oa + ob, strict=strict)

    def add_y(self, ds: DifferenceSystem, u: int, v: int, bound: Number, strict: bool = False) -> None:
        """Add ``y_u - y_v <= bound`` (``<`` when strict)."""
        ds.add(self._y_term(ds, u), self._y_term(ds, v), bound, strict=strict)

    def positions(
        self, X: Mapping[Hashable, Fraction], Y: Mapping[Hashable, Fraction]
    ) -> Dict[int, Tuple[Number, Number]]:
        found: Dict[int, Tuple[Number, Number]] = {}
        for v, stab in self.stabs.items():
            if v in self.body:
                head, offset = self.body[v]
                x = X[_x(head)] + offset
            else:
                x = X[_x(v)]
            var = _y(v)
            y = Y[var] if var in Y else self.owner.box(stab)[0]
            found[v] = (x, y)
        return found

    def clash(self, pos: Mapping[int, Tuple[Number, Number]]) -> Optional[Tuple[int, int]]:
        """
        The first touching non-adjacent pair with a new square in it.

        Pairs are ordered by (x, id) of their left square, then of their
        right one.
        """
        best: Optional[Tuple[Tuple[Number, int], Tuple[Number, int], int, int]] = None

        def offer(a: int, xa: Number, b: int, xb: Number) -> None:
            nonlocal best
            ka, kb = (xa, a), (xb, b)
            if kb < ka:
                ka, kb, a, b = kb, ka, b, a
            if best is None or (ka, kb) < best[:2]:
                best = (ka, kb, a, b)

        ranked = sorted(pos, key=lambda v: (pos[v][0], v))
        count = len(ranked)
        for i, u in enumerate(ranked):
            xu, yu = pos[u]
            limit = xu + 1
            j = i + 1
            while j < count:
                v = ranked[j]
                xv, yv = pos[v]
                if xv > limit:
                    break
                j += 1
                if edge_key(u, v) not in self.edges and abs(yu - yv) <= 1:
                    offer(u, xu, v, xv)
                    break
            for w in self.canvas.near(xu):
                if w in self.stabs or edge_key(u, w) in self.edges:
                    continue
                sq = self.canvas.square(w)
                if abs(sq.y - yu) <= 1:
                    offer(u, xu, w, sq.x)
        if best is None:
            return None
        return best[2], best[3]


class _Separation:
    """Lazy disjunctive search over non-edges between new squares and their surroundings."""

    def __init__(self, scope: _Scope) -> None:
        self.scope = scope
        self.owner = scope.owner
        self.nodes = 0

    def _solve(self, ds: DifferenceSystem, anchor: Hashable) -> Optional[Feasible]:
        self.owner.solver_calls += 1
        solution = solve_difference_system(ds, anchor=anchor, chain=self.owner.chain)
        return solution if isinstance(solution, Feasible) else None

    def run(self) -> Optional[Dict[int, Tuple[Number, Number]]]:
        xs, ys = self.scope.xs, self.scope.ys
        x_sol = self._solve(xs, X_ANCHOR)
        if x_sol is None:
            return None
        y_sol = self._solve(ys, Y_ANCHOR)
        if y_sol is None:
            return None
        return self._branch(xs, ys, x_sol, y_sol)

    def _branch(
        self,
        xs: DifferenceSystem,
        ys: DifferenceSystem,
        x_sol: Feasible,
        y_sol: Feasible,
    ) -> Optional[Dict[int, Tuple[Number, Number]]]:
        self.nodes += 1
        if self.nodes > self.owner.node_budget:
            raise _OutOfNodes()
        scope = self.scope
        pos = scope.positions(x_sol.values, y_sol.values)
        clash = scope.clash(pos)
        if clash is None:
            return pos

        left, right = clash
        for a, b in ((left, right), (right, left)):
            branch = xs.copy()
            scope.add_x(branch, a, b, -1, strict=True)
            solved = self._solve(branch, X_ANCHOR)
            if solved is not None:
                found = self._branch(branch, ys, solved, y_sol)
                if found is not None:
                    return found
        if scope.stab(left) is not scope.stab(right):
            up, low = (left, right) if scope.stab(left) is Stab.UPPER else (right, left)
            branch = ys.copy()
            scope.add_y(branch, low, up, -1, strict=True)
            solved = self._solve(branch, Y_ANCHOR)
            if solved is not None:
                return self._branch(xs, branch, x_sol, solved)
        return None
