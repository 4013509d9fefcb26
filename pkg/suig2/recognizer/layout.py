"""Direct layouts for paths and spiders."""

from fractions import Fraction
from typing import Dict, List

from suig2.geometry.representation import Representation, Square, Stab
from suig2.trees.tree import Tree, branch_vertices, max_degree

# (stab, x-direction) for the legs of a spider, in leg order
_LEG_SLOTS = (
    (Stab.LOWER, 1),
    (Stab.LOWER, -1),
    (Stab.UPPER, 1),
    (Stab.UPPER, -1),
)


def _walk(t: Tree, start: int, previous: int) -> List[int]:
    path = [start]
    while True:
        onward = [w for w in t.adjacency[path[-1]] if w != previous]
        if not onward:
            return path
        previous = path[-1]
        path.append(onward[0])


def layout_single_branch(t: Tree, epsilon: Fraction) -> Representation:
    """
    Lay out a tree with at most one branch vertex.

    A path goes on the lower stab at x = 0..n-1 from its smallest endpoint.
    A spider keeps its center on the lower stab at x = 0 with up to two
    legs running left and right on each stab.
    """
    if t.n == 0:
        return Representation.empty(epsilon)
    if max_degree(t) <= 2:
        return _path_layout(t, epsilon)
    branch = sorted(branch_vertices(t))
    if len(branch) > 1:
        raise ValueError(f"tree has {len(branch)} branch vertices")
    squares: Dict[int, Square] = {}
    center = branch[0]
    legs = sorted(t.adjacency[center])
    if len(legs) > len(_LEG_SLOTS):
        raise ValueError(f"center {center} has degree {len(legs)}")
    squares[center] = Square(0, 1, Stab.LOWER)
    for first, (stab, direction) in zip(legs, _LEG_SLOTS):
        y = 0 if stab is Stab.LOWER else 1 + epsilon
        for step, v in enumerate(_walk(t, first, center), start=1):
            squares[v] = Square(direction * step, y, stab)
    return Representation.from_squares(epsilon, squares)


def _path_layout(t: Tree, epsilon: Fraction) -> Representation:
    n = t.n
    adjacency = t.adjacency
    start = list(map(len, adjacency)).index(1) if n > 1 else 0
    xs = [0] * n
    previous, v = -1, start
    for x in range(n):
        xs[v] = x
        around = adjacency[v]
        if not around:
            break
        step = around[0]
        if step == previous and len(around) > 1:
            step = around[1]
        previous, v = v, step
    return Representation(
        epsilon=Fraction(epsilon),
        vertices=range(n),
        xs=tuple(xs),
        ys=(0,) * n,
        stabs=(Stab.LOWER,) * n,
    )
