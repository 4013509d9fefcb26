"""
Recognizer-versus-oracle comparison and random soundness fuzzing.
"""

import random
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Tuple

from suig2.config import Settings, get_settings
from suig2.core.budget import Deadline
from suig2.core.exceptions import BudgetExceededError, SearchBudgetError
from suig2.core.logging import get_logger
from suig2.geometry.representation import verify
from suig2.oracle.search import SearchConfig, brute_force_2suig
from suig2.recognizer.service import RecognizerService
from suig2.schemas.documents import CrossCheckRow, DecisionName
from suig2.trees.enumerate import enumerate_trees
from suig2.trees.tree import Tree, random_tree, serialize_tree

logger = get_logger(__name__)


@dataclass(frozen=True)
class CrossCheckReport:
    """Passes iff every row agrees; an UNKNOWN oracle row never agrees."""

    rows: Tuple[CrossCheckRow, ...]

    @property
    def mismatches(self) -> List[CrossCheckRow]:
        return [row for row in self.rows if not row.agree]

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_jsonl(self) -> str:
        return "".join(row.model_dump_json() + "\n" for row in self.rows)


def _compare(t: Tree, service: RecognizerService, cfg: SearchConfig) -> CrossCheckRow:
    try:
        ours = service.recognize(t).name
    except SearchBudgetError:
        ours = DecisionName.UNKNOWN
    try:
        theirs = brute_force_2suig(t, cfg, Deadline(cfg.time_budget)).decision
    except BudgetExceededError:
        theirs = DecisionName.UNKNOWN
    return CrossCheckRow(
        tree=[list(e) for e in t.edges],
        n=t.n,
        recognizer=ours,
        oracle=theirs,
        agree=theirs is not DecisionName.UNKNOWN and ours == theirs,
    )


def cross_check(
    cfg: SearchConfig,
    settings: Optional[Settings] = None,
    trees: Optional[Iterable[Tree]] = None,
) -> CrossCheckReport:
    """
    Compare the recognizer with the oracle on every tree up to cfg.max_n
    vertices, one per isomorphism class, or on the given trees.
    """
    service = RecognizerService(settings or get_settings())
    if trees is None:
        trees = (t for n in range(1, cfg.max_n + 1) for t in enumerate_trees(n))
    rows = tuple(_compare(t, service, cfg) for t in trees)
    report = CrossCheckReport(rows)
    logger.info(
        f"Cross-checked {len(rows)} trees, {len(report.mismatches)} mismatches",
        extra={"max_n": cfg.max_n},
    )
    return report


@dataclass
class FuzzReport:
    checked: int = 0
    accepted: int = 0
    undecided: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def fuzz_soundness(count: int, size: int, seed: int, settings: Optional[Settings] = None) -> FuzzReport:
    """
    Recognize ``count`` random trees of 1..size vertices and verify every
    accept. Failing trees are kept as edge-list text.
    """
    base = settings or get_settings()
    service = RecognizerService(base.model_copy(update={"verify_accepts": False}))
    rng = random.Random(seed)
    report = FuzzReport()
    logger.info(f"Fuzzing {count} trees of at most {size} vertices", extra={"seed": seed})
    for _ in range(count):
        t = random_tree(rng.randint(1, size), rng)
        report.checked += 1
        try:
            decision = service.recognize(t)
        except SearchBudgetError as e:
            logger.warning(f"No verdict on a tree with {t.n} vertices", extra={"stage": e.stage})
            report.undecided += 1
            continue
        if not decision.accepted:
            continue
        report.accepted += 1
        assert decision.representation is not None
        if not verify(decision.representation, t).passed:
            logger.error(f"Unsound accept on a tree with {t.n} vertices")
            report.failures.append(serialize_tree(t))
    return report
