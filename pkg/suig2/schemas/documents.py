"""
Pydantic documents for everything the CLI reads or writes.

Field order is fixed by the models, so JSON output is byte-stable.
"""

from enum import Enum
from fractions import Fraction
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

SCHEMA_VERSION = "suig2/v1"


class RationalDocument(BaseModel):
    """An exact rational as numerator and positive denominator."""

    model_config = ConfigDict(json_schema_extra={"example": {"num": 1, "den": 2}})

    num: int
    den: int = Field(default=1, gt=0)

    @classmethod
    def of(cls, value: object) -> "RationalDocument":
        fraction = Fraction(value)  # type: ignore[arg-type]
        return cls(num=fraction.numerator, den=fraction.denominator)

    def value(self) -> Fraction:
        return Fraction(self.num, self.den)


class StabName(str, Enum):
    LOWER = "lower"
    UPPER = "upper"


class SquareDocument(BaseModel):
    v: int = Field(..., ge=0, description="Vertex id")
    x: RationalDocument
    y: RationalDocument
    stab: StabName


class RepresentationDocument(BaseModel):
    """Exact unit-square representation on two stabs."""

    model_config = ConfigDict(populate_by_name=True)

    schema_version: str = Field(default=SCHEMA_VERSION, alias="schema")
    epsilon: RationalDocument
    squares: List[SquareDocument] = Field(default_factory=list)

    @field_validator("schema_version")
    @classmethod
    def known_schema(cls, v: str) -> str:
        if v != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema {v!r}, expected {SCHEMA_VERSION!r}")
        return v

    @field_validator("squares")
    @classmethod
    def distinct_vertices(cls, v: List[SquareDocument]) -> List[SquareDocument]:
        ids = [s.v for s in v]
        if len(ids) != len(set(ids)):
            raise ValueError("a vertex appears twice")
        return v


class AgentEntry(BaseModel):
    red: int
    agents: List[int]


class TailEntry(BaseModel):
    agent: int
    long: List[int]
    short: List[int]


class DecompositionDocument(BaseModel):
    """Red path, agents and tails, as printed by ``recognize --explain``."""

    schema_version: str = Field(default=SCHEMA_VERSION, alias="schema")
    origin: str
    path: List[int]
    agents: List[AgentEntry]
    tails: List[TailEntry]

    model_config = ConfigDict(populate_by_name=True)


class CertificateKind(str, Enum):
    DEGREE_EXCEEDED = "DegreeExceeded"
    RED_SUBGRAPH_NOT_PATH = "RedSubgraphNotPath"
    NO_SPECIAL_VERTEX = "NoSpecialVertex"
    MALFORMED_PERIPHERY = "MalformedPeriphery"
    STAGE_FAILURE = "StageFailure"


class CertificateDocument(BaseModel):
    """Machine-readable rejection witness."""

    model_config = ConfigDict(populate_by_name=True)

    schema_version: str = Field(default=SCHEMA_VERSION, alias="schema")
    kind: CertificateKind
    vertices: List[int] = Field(default_factory=list)
    stage: Optional[int] = Field(default=None, ge=1, description="1-based red index")
    tried: Optional[int] = Field(default=None, ge=0)
    violations: List[str] = Field(default_factory=list)


class DecisionName(str, Enum):
    ACCEPT = "ACCEPT"
    REJECT = "REJECT"
    UNKNOWN = "UNKNOWN"


class CrossCheckRow(BaseModel):
    """One JSON line of a cross-check report."""

    tree: List[List[int]]
    n: int
    recognizer: DecisionName
    oracle: DecisionName
    agree: bool
