"""
Written placement conditions for each stage, as labelled predicates.

Conditions read a ``StageView``: the candidate's corner roles seen in the
stage's normalized frame. The first stage and the single-vertex stage are
read as placed (the first red vertex is lower). Middle and last stages are
read with the previous red vertex upper; when it is lower the view is the
vertical mirror image.

Ids name the stage and the item:
    first.caseN.M   first red vertex of a longer path, degree case N
    single.M        the only red vertex
    middle.M        an inner red vertex
    last.a..last.k  the last red vertex, items in order of appearance
"""

from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from suig2.geometry.representation import Stab
from suig2.recognizer.state import LEFT, RIGHT, AgentPlacement, Corner, StageChoice, TailSlot

Z1, Z2, Z3, Z4 = Corner.LOWER_LEFT, Corner.UPPER_LEFT, Corner.UPPER_RIGHT, Corner.LOWER_RIGHT

LOWER_LEFT = TailSlot(Stab.LOWER, LEFT)
LOWER_RIGHT = TailSlot(Stab.LOWER, RIGHT)
UPPER_LEFT = TailSlot(Stab.UPPER, LEFT)
UPPER_RIGHT = TailSlot(Stab.UPPER, RIGHT)


@dataclass(frozen=True)
class StageView:
    red_stab: Stab
    roles: Dict[Corner, AgentPlacement]
    previous_upper_right_tail: int = 0

    @classmethod
    def of(
        cls,
        choice: StageChoice,
        reflect: bool,
        previous: Optional[StageChoice] = None,
    ) -> "StageView":
        placements = [p.reflected() if reflect else p for p in choice.placements]
        red_stab = choice.red_stab.other if reflect else choice.red_stab
        longest = 0
        if previous is not None:
            for p in previous.placements:
                q = p.reflected() if reflect else p
                longest = max(longest, q.slot_length(UPPER_RIGHT))
        return cls(red_stab, {p.corner: p for p in placements}, longest)

    def has(self, z: Corner) -> bool:
        return z in self.roles

    def lt(self, z: Corner) -> int:
        return self.roles[z].long_length if z in self.roles else 0

    def st(self, z: Corner) -> int:
        return self.roles[z].short_length if z in self.roles else 0

    def slot(self, z: Corner, slot: TailSlot) -> int:
        return self.roles[z].slot_length(slot) if z in self.roles else 0

    def lt_in(self, z: Corner, slot: TailSlot) -> bool:
        """Holds vacuously when z is absent or its long tail is empty."""
        if self.lt(z) == 0:
            return True
        return self.roles[z].long_slot == slot

    @property
    def lower(self) -> bool:
        return self.red_stab is Stab.LOWER

    @property
    def upper(self) -> bool:
        return self.red_stab is Stab.UPPER


Predicate = Callable[[StageView], bool]


@dataclass(frozen=True)
class Condition:
    id: str
    holds: Predicate
    preference: bool = False


def _case1_common(v: StageView) -> bool:
    return (
        v.lt_in(Z1, LOWER_LEFT)
        and v.lt_in(Z2, UPPER_LEFT)
        and v.st(Z2) <= 1
        and (v.st(Z1) == 0 or v.lt(Z2) <= 1)
    )


_FIRST_CASES: Dict[Tuple[int, int], List[Condition]] = {
    (4, 4): [
        Condition("first.case1.1", lambda v: v.lt_in(Z1, LOWER_LEFT)),
        Condition("first.case1.2", lambda v: v.lt_in(Z2, UPPER_LEFT)),
        Condition("first.case1.3", lambda v: v.st(Z2) <= 1 and (v.st(Z1) == 0 or v.lt(Z2) <= 1)),
        Condition("first.case1.4", lambda v: v.lt(Z4) == 0),
    ],
    (3, 4): [
        Condition("first.case2.1", _case1_common),
    ],
    (4, 3): [
        Condition("first.case3.1", _case1_common),
        Condition("first.case3.2", lambda v: v.lt(Z3) <= 1 and v.lt_in(Z3, UPPER_LEFT)),
    ],
    (3, 3): [
        Condition("first.case4.1", lambda v: v.lt_in(Z1, LOWER_LEFT)),
        Condition(
            "first.case4.2",
            lambda v: v.st(Z1) == 0
            or not v.has(Z2)
            or (v.lt_in(Z2, UPPER_RIGHT) and v.lt(Z2) <= 3 and v.st(Z2) <= 1),
        ),
        Condition(
            "first.case4.3",
            lambda v: v.st(Z1) > 0 or not v.has(Z2) or (v.lt_in(Z2, UPPER_LEFT) and v.st(Z2) <= 3),
        ),
    ],
    (4, 2): [
        Condition("first.case5.1", _case1_common),
        Condition("first.case5.2", lambda v: v.lt(Z3) > 1 or v.lt_in(Z3, UPPER_LEFT)),
        Condition(
            "first.case5.3",
            lambda v: v.lt(Z3) <= 1 or (v.st(Z3) <= 1 and v.lt_in(Z3, UPPER_RIGHT)),
        ),
    ],
    (3, 2): [
        Condition("first.case6.1", lambda v: v.lt_in(Z1, LOWER_LEFT)),
        Condition(
            "first.case6.2",
            lambda v: not (v.has(Z1) and v.has(Z2) and v.st(Z1) == 0) or v.lt_in(Z2, UPPER_LEFT),
        ),
        Condition(
            "first.case6.3",
            lambda v: not (v.has(Z1) and v.has(Z2) and v.st(Z1) > 0 and v.lt(Z2) <= 1)
            or v.lt_in(Z2, UPPER_LEFT),
        ),
        Condition(
            "first.case6.4",
            lambda v: not (v.has(Z1) and v.has(Z2) and v.st(Z1) > 0 and v.lt(Z2) > 1)
            or (v.lt_in(Z2, UPPER_RIGHT) and v.st(Z1) <= 1),
        ),
        Condition("first.case6.5", lambda v: not (v.has(Z2) and v.has(Z3)), preference=True),
        Condition(
            "first.case6.6",
            lambda v: not (v.has(Z1) and v.has(Z3) and v.st(Z1) == 0),
            preference=True,
        ),
        Condition(
            "first.case6.7",
            lambda v: not (v.has(Z1) and v.has(Z3) and v.st(Z3) <= 1 and v.lt(Z3) <= 3),
            preference=True,
        ),
        Condition(
            "first.case6.8",
            lambda v: not (v.has(Z1) and v.has(Z3) and v.st(Z1) > 0 and v.lt(Z3) <= 3)
            or v.lt_in(Z3, UPPER_LEFT),
        ),
        Condition(
            "first.case6.9",
            lambda v: not (v.has(Z1) and v.has(Z3) and v.st(Z1) > 0 and v.lt(Z3) > 3)
            or (v.lt_in(Z3, UPPER_RIGHT) and v.st(Z1) <= 3),
        ),
    ],
}

# Items 1-4 of the single-vertex list are the slot table itself.
SINGLE: List[Condition] = [
    Condition("single.5", lambda v: v.slot(Z1, UPPER_LEFT) == 0 or v.slot(Z2, UPPER_LEFT) <= 1),
    Condition(
        "single.6",
        lambda v: v.has(Z2) or v.slot(Z1, UPPER_LEFT) == 0 or v.slot(Z3, UPPER_LEFT) <= 3,
    ),
    Condition(
        "single.7",
        lambda v: not (v.has(Z2) and v.has(Z3))
        or (v.slot(Z2, UPPER_RIGHT) <= 1 and v.slot(Z3, UPPER_LEFT) <= 1),
    ),
    Condition("single.8", lambda v: v.slot(Z4, UPPER_RIGHT) == 0 or v.slot(Z3, UPPER_RIGHT) <= 1),
    Condition(
        "single.9",
        lambda v: v.has(Z3) or v.slot(Z4, UPPER_RIGHT) == 0 or v.slot(Z2, UPPER_RIGHT) <= 3,
    ),
]

MIDDLE: List[Condition] = [
    Condition(
        "middle.1",
        lambda v: not (v.has(Z1) and v.lower) or (v.st(Z1) == 0 and v.lt_in(Z1, LOWER_LEFT)),
    ),
    Condition(
        "middle.2",
        lambda v: not (v.has(Z1) and v.upper and (v.has(Z3) or v.has(Z4)))
        or (v.st(Z1) <= 1 and v.lt_in(Z1, LOWER_LEFT)),
    ),
    Condition(
        "middle.4",
        lambda v: not (v.has(Z3) and v.upper) or (v.st(Z3) == 0 and v.lt_in(Z3, UPPER_RIGHT)),
    ),
    Condition("middle.5", lambda v: not (v.has(Z3) and v.lower) or v.slot(Z3, UPPER_LEFT) <= 1),
    Condition(
        "middle.6",
        lambda v: not (v.has(Z4) and v.upper and v.has(Z1)) or v.slot(Z4, LOWER_LEFT) <= 1,
    ),
    Condition(
        "middle.8",
        lambda v: not (v.has(Z4) and v.lower) or (v.st(Z4) == 0 and v.lt_in(Z4, LOWER_RIGHT)),
    ),
]


def _last_b(v: StageView) -> bool:
    if not (v.has(Z1) and v.upper and v.has(Z4)):
        return True
    if v.st(Z1) > 1:
        return False
    return v.lt_in(Z1, LOWER_RIGHT) if v.lt(Z1) <= 1 else v.lt_in(Z1, LOWER_LEFT)


def _last_c(v: StageView) -> bool:
    if not (v.has(Z1) and v.upper and not v.has(Z4) and v.has(Z3) and v.st(Z3) >= 1):
        return True
    if v.st(Z1) > 3:
        return False
    return v.lt_in(Z1, LOWER_RIGHT) if v.lt(Z1) <= 3 else v.lt_in(Z1, LOWER_LEFT)


LAST: List[Condition] = [
    Condition(
        "last.a",
        lambda v: not (v.has(Z1) and v.lower) or (v.st(Z1) == 0 and v.lt_in(Z1, LOWER_LEFT)),
    ),
    Condition("last.b", _last_b),
    Condition("last.c", _last_c),
    Condition(
        "last.d",
        lambda v: not (v.has(Z1) and v.upper and not v.has(Z4) and v.has(Z3) and v.st(Z3) == 0)
        or v.lt_in(Z1, LOWER_RIGHT),
    ),
    Condition(
        "last.e",
        lambda v: not (v.has(Z3) and v.upper)
        or (v.lt_in(Z3, UPPER_RIGHT) and (not v.has(Z4) or v.st(Z3) == 0)),
    ),
    Condition(
        "last.f",
        lambda v: not (v.lower and v.previous_upper_right_tail >= 2) or not v.has(Z3),
    ),
    Condition(
        "last.g",
        lambda v: not (v.has(Z3) and v.lower and v.has(Z4) and v.lt(Z4) >= 1)
        or v.slot(Z3, UPPER_LEFT) <= 1,
    ),
    Condition(
        "last.h",
        lambda v: not (v.has(Z3) and v.lower and (not v.has(Z4) or v.lt(Z4) == 0))
        or v.lt_in(Z3, UPPER_RIGHT),
    ),
    Condition(
        "last.k",
        lambda v: not (v.has(Z4) and v.lower)
        or (
            v.lt_in(Z4, LOWER_RIGHT)
            and (not (v.has(Z3) or v.previous_upper_right_tail >= 4) or v.st(Z4) == 0)
        ),
    ),
]


def first_stage_conditions(d_first: int, d_second: int) -> List[Condition]:
    return _FIRST_CASES.get((d_first, d_second), [])


def evaluate(conditions: Sequence[Condition], view: StageView) -> Tuple[List[str], int]:
    """Violated filter ids, and how many preference rules the view breaks."""
    violated: List[str] = []
    penalty = 0
    for condition in conditions:
        if condition.holds(view):
            continue
        if condition.preference:
            penalty += 1
        else:
            violated.append(condition.id)
    return violated, penalty


def tail_budget(case: int, m: int, alpha_v: int, alpha_w: int) -> bool:
    """
    Whether two facing tails fit between red branch vertices m steps apart.

    ``case`` encodes the agent sides: 1 both agents inside the gap, 2 left
    agent outside, 3 both outside, 4 right agent outside.
    """
    slack = {1: 0, 2: 1, 3: 2, 4: 1}
    if case not in slack:
        raise ValueError(f"case must be 1..4, got {case}")
    return alpha_v + alpha_w - slack[case] <= m
