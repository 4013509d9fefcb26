"""Pydantic schemas for suig2 documents."""

from suig2.schemas.documents import (
    SCHEMA_VERSION,
    AgentEntry,
    CertificateDocument,
    CertificateKind,
    CrossCheckRow,
    DecisionName,
    DecompositionDocument,
    RationalDocument,
    RepresentationDocument,
    SquareDocument,
    StabName,
    TailEntry,
)

__all__ = [
    "SCHEMA_VERSION",
    "AgentEntry",
    "CertificateDocument",
    "CertificateKind",
    "CrossCheckRow",
    "DecisionName",
    "DecompositionDocument",
    "RationalDocument",
    "RepresentationDocument",
    "SquareDocument",
    "StabName",
    "TailEntry",
]
