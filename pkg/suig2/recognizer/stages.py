"""
Stage-by-stage placement of the red vertices and their associates.

Every stage enumerates the ways to put the agents of one red vertex into
free corners and its tails into slots, drops the ways its written
conditions rule out, realizes the rest and returns the survivors.
"""

from dataclasses import dataclass, field
from enum import Enum
from itertools import permutations, product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from suig2.core.logging import get_logger
from suig2.geometry.rationals import independence_number
from suig2.geometry.representation import Stab
from suig2.recognizer.conditions import (
    LAST,
    MIDDLE,
    SINGLE,
    Condition,
    StageView,
    evaluate,
    first_stage_conditions,
    tail_budget,
)
from suig2.recognizer.realize import GEOMETRY, Realizer, Unrealizable
from suig2.recognizer.state import (
    CORNER_ORDER,
    LEFT,
    RIGHT,
    AgentPlacement,
    Corner,
    PendingTail,
    PlacementState,
    StageChoice,
    tail_slots,
)
from suig2.trees.red import Decomposition
from suig2.trees.tree import Tree, degree

logger = get_logger(__name__)


class StabRelation(str, Enum):
    SAME = "same"
    DIFFERENT = "different"


def stab_of_a2(d1: int, d2: int) -> StabRelation:
    """Two adjacent degree-4 red vertices cannot share a stab; otherwise keep it."""
    return StabRelation.DIFFERENT if d1 == 4 and d2 == 4 else StabRelation.SAME


def next_stab_options(red_stab: Stab, d_here: int, d_next: int) -> Tuple[Stab, ...]:
    if d_here == 4 and d_next == 4:
        return (red_stab.other,)
    if d_here < 3 or d_next < 3:
        return (red_stab,)
    return (red_stab, red_stab.other)


def _budget_case(right_tail_agent_side: int, left_tail_agent_side: int) -> int:
    if right_tail_agent_side == RIGHT:
        return 1 if left_tail_agent_side == LEFT else 4
    return 2 if left_tail_agent_side == LEFT else 3


@dataclass
class StageOutcome:
    candidates: List[PlacementState] = field(default_factory=list)
    tried: int = 0
    violations: List[str] = field(default_factory=list)


def choose_optimized(candidates: Sequence[PlacementState]) -> PlacementState:
    """
    Pick the candidate whose new squares reach least far right.

    Ties go to fewer broken preferences, no stab change, fewer upper
    squares, then the smallest role assignment and orientation.
    """
    if not candidates:
        raise ValueError("choose_optimized needs at least one candidate")

    def key(state: PlacementState):  # type: ignore[no-untyped-def]
        choice = state.last
        assert choice is not None
        changes = int(choice.next_stab is not None and choice.next_stab is not choice.red_stab)
        return (
            state.extent,
            state.preference_penalty,
            changes,
            choice.upper_squares,
            choice.roles.key(),
            choice.orientation_key(),
        )

    return min(candidates, key=key)


class StagePlanner:
    def __init__(self, t: Tree, decomposition: Decomposition, realizer: Realizer) -> None:
        self.t = t
        self.d = decomposition
        self.realizer = realizer

    @property
    def k(self) -> int:
        return self.d.path.k

    def place(self, state: PlacementState, index: int) -> StageOutcome:
        if self.k == 1:
            return self.place_a1_singleton(state)
        if index == 0:
            return self.place_a1(state)
        if index == self.k - 1:
            return self.place_ak(state)
        return self.place_middle(state, index)

    def place_a1(self, state: PlacementState) -> StageOutcome:
        if self.k < 2 or state.stages:
            raise ValueError("place_a1 starts a path of at least two red vertices")
        a1, a2 = self.d.red[0], self.d.red[1]
        d1, d2 = degree(self.t, a1), degree(self.t, a2)
        relation = stab_of_a2(d1, d2)
        next_stab = Stab.UPPER if relation is StabRelation.DIFFERENT else Stab.LOWER
        choices = self._enumerate(0, Stab.LOWER, None, (next_stab,))
        return self._run(state, choices, first_stage_conditions(d1, d2), reflect=False)

    def place_a1_singleton(self, state: PlacementState) -> StageOutcome:
        if self.k != 1 or state.stages:
            raise ValueError("place_a1_singleton handles a path of one red vertex")
        choices = self._enumerate(0, Stab.LOWER, None, (None,))
        return self._run(state, choices, SINGLE, reflect=False)

    def place_middle(self, state: PlacementState, index: int) -> StageOutcome:
        if not 0 < index < self.k - 1 or state.stages != index:
            raise ValueError(f"place_middle cannot place a{index + 1} after {state.stages} stages")
        previous = state.last
        assert previous is not None
        red_stab = previous.next_stab
        assert red_stab is not None
        options = next_stab_options(
            red_stab,
            degree(self.t, self.d.red[index]),
            degree(self.t, self.d.red[index + 1]),
        )
        choices = self._enumerate(index, red_stab, previous.red_stab, options)
        return self._run(state, choices, MIDDLE, reflect=previous.red_stab is Stab.LOWER)

    def place_ak(self, state: PlacementState) -> StageOutcome:
        index = self.k - 1
        if self.k < 2 or state.stages != index:
            raise ValueError("place_ak needs every earlier red vertex placed")
        previous = state.last
        assert previous is not None
        red_stab = previous.next_stab
        assert red_stab is not None
        choices = self._enumerate(index, red_stab, previous.red_stab, (None,))
        return self._run(
            state,
            choices,
            LAST,
            reflect=previous.red_stab is Stab.LOWER,
            previous=previous,
        )

    def _orientations(self, agent: int, corner: Corner, red_stab: Stab) -> List[AgentPlacement]:
        tails = self.d.tails[agent]
        first, second = tail_slots(corner, red_stab)
        options = [(first, second)] if not tails.long else [(first, second), (second, first)]
        return [
            AgentPlacement(agent, corner, long_slot, short_slot, len(tails.long), len(tails.short))
            for long_slot, short_slot in options
        ]

    def _enumerate(
        self,
        index: int,
        red_stab: Stab,
        previous_stab: Optional[Stab],
        next_options: Sequence[Optional[Stab]],
    ) -> Iterator[StageChoice]:
        red = self.d.red[index]
        agents = self.d.agents[red]
        for next_stab in next_options:
            taken = set()
            if previous_stab is not None:
                taken.add(Corner.at(previous_stab, LEFT))
            if next_stab is not None:
                taken.add(Corner.at(next_stab, RIGHT))
            free = [c for c in CORNER_ORDER if c not in taken]
            for corners in permutations(free, len(agents)):
                per_agent = [
                    self._orientations(z, corner, red_stab) for z, corner in zip(agents, corners)
                ]
                for placements in product(*per_agent):
                    yield StageChoice(index, red, red_stab, next_stab, tuple(placements))

    def _run(
        self,
        state: PlacementState,
        choices: Iterator[StageChoice],
        conditions: Sequence[Condition],
        reflect: bool,
        previous: Optional[StageChoice] = None,
    ) -> StageOutcome:
        state = state.committed()
        outcome = StageOutcome()
        index = state.stages
        for choice in choices:
            outcome.tried += 1
            failed, penalty = evaluate(conditions, StageView.of(choice, reflect, previous))
            if failed:
                outcome.violations.extend(failed)
                continue
            realized = self.realizer.realize(state.canvas, choice)
            if isinstance(realized, Unrealizable):
                outcome.violations.append(realized.label)
                if realized.label == GEOMETRY:
                    outcome.violations.extend(self._budget_labels(state, choice))
                continue
            outcome.candidates.append(
                PlacementState(
                    canvas=state.canvas,
                    last=choice,
                    stages=state.stages + 1,
                    fresh=realized.fresh,
                    pending_right_tails=self._pending(state, choice),
                    extent=realized.extent,
                    preference_penalty=penalty,
                )
            )
        logger.debug(
            f"Stage a{index + 1}: {len(outcome.candidates)} of {outcome.tried} candidates realized",
            extra={"violations": sorted(set(outcome.violations))},
        )
        return outcome

    @staticmethod
    def _pending(state: PlacementState, choice: StageChoice) -> Tuple[PendingTail, ...]:
        """The latest right-running tail in each stab."""
        pending = {p.stab: p for p in state.pending_right_tails}
        fresh: Dict[Stab, PendingTail] = {}
        for p in choice.placements:
            for slot in (p.long_slot, p.short_slot):
                length = p.slot_length(slot)
                if length and slot.direction == RIGHT:
                    tail = PendingTail(choice.index, slot.stab, p.corner.side, independence_number(length + 1))
                    if slot.stab not in fresh or tail.alpha > fresh[slot.stab].alpha:
                        fresh[slot.stab] = tail
        pending.update(fresh)
        return tuple(pending[s] for s in (Stab.LOWER, Stab.UPPER) if s in pending)

    @staticmethod
    def _budget_labels(state: PlacementState, choice: StageChoice) -> List[str]:
        """Names of facing-tail budgets the candidate breaks, for the certificate."""
        labels = []
        for tail in state.pending_right_tails:
            for p in choice.placements:
                for slot in (p.long_slot, p.short_slot):
                    length = p.slot_length(slot)
                    if not length or slot.direction != LEFT or slot.stab is not tail.stab:
                        continue
                    case = _budget_case(tail.agent_side, p.corner.side)
                    alpha = independence_number(length + 1)
                    if not tail_budget(case, choice.index - tail.owner, tail.alpha, alpha):
                        labels.append(f"budget.case{case}")
        return labels
