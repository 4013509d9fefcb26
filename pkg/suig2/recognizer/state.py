"""
Placement state, corner roles and rejection certificates.

Corner roles follow the usual naming around the square of a red vertex:
z1 lower-left, z2 upper-left, z3 upper-right, z4 lower-right.
"""

import math
from collections import defaultdict
from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from suig2.geometry.rationals import Number
from suig2.geometry.representation import Representation, Square, Stab
from suig2.schemas.documents import CertificateDocument, CertificateKind

LEFT = -1
RIGHT = 1


class Corner(str, Enum):
    LOWER_LEFT = "z1"
    UPPER_LEFT = "z2"
    UPPER_RIGHT = "z3"
    LOWER_RIGHT = "z4"

    @property
    def stab(self) -> Stab:
        return Stab.LOWER if self in (Corner.LOWER_LEFT, Corner.LOWER_RIGHT) else Stab.UPPER

    @property
    def side(self) -> int:
        return LEFT if self in (Corner.LOWER_LEFT, Corner.UPPER_LEFT) else RIGHT

    @classmethod
    def at(cls, stab: Stab, side: int) -> "Corner":
        if side == LEFT:
            return cls.LOWER_LEFT if stab is Stab.LOWER else cls.UPPER_LEFT
        return cls.LOWER_RIGHT if stab is Stab.LOWER else cls.UPPER_RIGHT

    def reflected(self) -> "Corner":
        return Corner.at(self.stab.other, self.side)


CORNER_ORDER = (Corner.LOWER_LEFT, Corner.UPPER_LEFT, Corner.UPPER_RIGHT, Corner.LOWER_RIGHT)


@dataclass(frozen=True)
class TailSlot:
    """Where a tail runs: its stab and its x-direction away from the agent."""

    stab: Stab
    direction: int

    def reflected(self) -> "TailSlot":
        return TailSlot(self.stab.other, self.direction)

    def __str__(self) -> str:
        return f"{self.stab.value}-{'left' if self.direction == LEFT else 'right'}"


def tail_slots(corner: Corner, red_stab: Stab) -> Tuple[TailSlot, TailSlot]:
    """
    The two slots an agent in ``corner`` can send its tails into.

    An agent in the red vertex's stab sends tails outward, in either stab.
    An agent in the other stab keeps its tails in its own stab, one running
    left and one running right.
    """
    if corner.stab is red_stab:
        return TailSlot(corner.stab, corner.side), TailSlot(corner.stab.other, corner.side)
    return TailSlot(corner.stab, LEFT), TailSlot(corner.stab, RIGHT)


@dataclass(frozen=True)
class AgentPlacement:
    """An agent in a corner, with the slot chosen for each of its tails."""

    agent: int
    corner: Corner
    long_slot: TailSlot
    short_slot: TailSlot
    long_length: int
    short_length: int

    def slot_length(self, slot: TailSlot) -> int:
        if slot == self.long_slot:
            return self.long_length
        if slot == self.short_slot:
            return self.short_length
        return 0

    def reflected(self) -> "AgentPlacement":
        return AgentPlacement(
            agent=self.agent,
            corner=self.corner.reflected(),
            long_slot=self.long_slot.reflected(),
            short_slot=self.short_slot.reflected(),
            long_length=self.long_length,
            short_length=self.short_length,
        )


@dataclass(frozen=True)
class RoleAssignment:
    z1: Optional[int] = None
    z2: Optional[int] = None
    z3: Optional[int] = None
    z4: Optional[int] = None

    @classmethod
    def of(cls, placements: Sequence[AgentPlacement]) -> "RoleAssignment":
        roles = {p.corner.value: p.agent for p in placements}
        return cls(**roles)

    def key(self) -> Tuple[int, ...]:
        return tuple(-1 if a is None else a for a in (self.z1, self.z2, self.z3, self.z4))


@dataclass(frozen=True)
class StageChoice:
    """
    The combinatorial placement of one red vertex and its associates.

    ``next_stab`` is the stab given to the following red vertex, or None for
    the last one.
    """

    index: int
    red: int
    red_stab: Stab
    next_stab: Optional[Stab]
    placements: Tuple[AgentPlacement, ...]

    @property
    def roles(self) -> RoleAssignment:
        return RoleAssignment.of(self.placements)

    @property
    def upper_squares(self) -> int:
        count = int(self.red_stab is Stab.UPPER) + int(self.next_stab is Stab.UPPER)
        for p in self.placements:
            count += int(p.corner.stab is Stab.UPPER)
            count += sum(
                p.slot_length(slot) for slot in (p.long_slot, p.short_slot) if slot.stab is Stab.UPPER
            )
        return count

    def orientation_key(self) -> Tuple[Tuple[str, str], ...]:
        return tuple((str(p.long_slot), str(p.short_slot)) for p in self.placements)


@dataclass(frozen=True)
class PendingTail:
    """A right-running tail waiting for a left-running tail of a later red vertex."""

    owner: int
    stab: Stab
    agent_side: int
    alpha: int


class Canvas:
    """
    Squares committed by earlier stages, indexed by the integer part of x.

    Candidates of one stage read the canvas; only the chosen one is
    committed into it, so stages never copy the squares placed before them.
    """

    def __init__(self, epsilon: Fraction) -> None:
        self.epsilon = Fraction(epsilon)
        self._squares: Dict[int, Square] = {}
        self._columns: Dict[int, List[int]] = defaultdict(list)

    def __len__(self) -> int:
        return len(self._squares)

    def __contains__(self, v: object) -> bool:
        return v in self._squares

    def square(self, v: int) -> Square:
        return self._squares[v]

    def near(self, x: Number) -> Iterator[int]:
        """Committed vertices whose square lies within x-distance 1 of ``x``."""
        column = math.floor(x)
        for c in (column - 1, column, column + 1):
            for v in self._columns.get(c, ()):
                if abs(self._squares[v].x - x) <= 1:
                    yield v

    def commit(self, squares: Mapping[int, Square]) -> None:
        for v, sq in squares.items():
            old = self._squares.get(v)
            if old is not None:
                self._columns[math.floor(old.x)].remove(v)
            self._squares[v] = sq
            self._columns[math.floor(sq.x)].append(v)

    def representation(self, fresh: Optional[Mapping[int, Square]] = None) -> Representation:
        squares = dict(self._squares)
        if fresh:
            squares.update(fresh)
        return Representation.from_squares(self.epsilon, squares)


@dataclass(frozen=True)
class PlacementState:
    """
    The representation built so far and the last choice that extended it.

    ``canvas`` holds the committed squares; ``fresh`` holds the squares of
    this candidate until it is committed. Together they pass verification
    against the subtree they induce.
    """

    canvas: Canvas
    last: Optional[StageChoice] = None
    stages: int = 0
    fresh: Mapping[int, Square] = field(default_factory=dict)
    pending_right_tails: Tuple[PendingTail, ...] = ()
    extent: Optional[Number] = None
    preference_penalty: int = 0

    @classmethod
    def start(cls, epsilon: Fraction) -> "PlacementState":
        return cls(canvas=Canvas(epsilon))

    @property
    def partial(self) -> Representation:
        return self.canvas.representation(self.fresh)

    def committed(self) -> "PlacementState":
        """Move the fresh squares into the shared canvas."""
        if not self.fresh:
            return self
        self.canvas.commit(self.fresh)
        return replace(self, fresh={})


@dataclass(frozen=True)
class Certificate:
    """Why a tree was rejected. ``stage`` is the 1-based red index of a stage failure."""

    kind: CertificateKind
    vertices: Tuple[int, ...] = ()
    stage: Optional[int] = None
    tried: Optional[int] = None
    violations: Tuple[str, ...] = ()

    @classmethod
    def degree_exceeded(cls, v: int) -> "Certificate":
        return cls(CertificateKind.DEGREE_EXCEEDED, (v,))

    @classmethod
    def red_subgraph_not_path(cls, witness: Sequence[int]) -> "Certificate":
        return cls(CertificateKind.RED_SUBGRAPH_NOT_PATH, tuple(witness))

    @classmethod
    def no_special_vertex(cls) -> "Certificate":
        return cls(CertificateKind.NO_SPECIAL_VERTEX)

    @classmethod
    def malformed_periphery(cls, v: Optional[int]) -> "Certificate":
        return cls(CertificateKind.MALFORMED_PERIPHERY, () if v is None else (v,))

    @classmethod
    def stage_failure(cls, stage: int, tried: int, violations: List[str]) -> "Certificate":
        return cls(
            CertificateKind.STAGE_FAILURE,
            stage=stage,
            tried=tried,
            violations=tuple(sorted(set(violations))),
        )

    def to_document(self) -> CertificateDocument:
        return CertificateDocument(
            kind=self.kind,
            vertices=list(self.vertices),
            stage=self.stage,
            tried=self.tried,
            violations=list(self.violations),
        )

    def summary(self) -> str:
        if self.kind is CertificateKind.STAGE_FAILURE:
            return f"{self.kind.value} at a{self.stage} after {self.tried} candidates"
        if self.vertices:
            return f"{self.kind.value} at {', '.join(map(str, self.vertices))}"
        return self.kind.value
