"""
Tree recognition service.

Runs the checks in order: degree, single branch vertex, red path,
decomposition, then the stage loop over the extended red path in both
orientations.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

from suig2.config import Settings, get_settings
from suig2.core.exceptions import (
    InternalError,
    MalformedPeripheryError,
    NoSpecialVertexError,
    SearchBudgetError,
)
from suig2.core.logging import get_logger
from suig2.geometry.representation import Representation, verify
from suig2.recognizer.layout import layout_single_branch
from suig2.recognizer.realize import SEARCH_BUDGET, Realizer
from suig2.recognizer.stages import StagePlanner, choose_optimized
from suig2.recognizer.state import Certificate, PlacementState
from suig2.schemas.documents import DecisionName
from suig2.trees.red import (
    Decomposition,
    RedOutcomeKind,
    decompose,
    extended_red_path,
    red_edges,
    red_path_or_fail,
)
from suig2.trees.tree import Tree, branch_vertices, max_degree

logger = get_logger(__name__)


@dataclass(frozen=True)
class Decision:
    """Accept carries a representation, Reject a certificate."""

    accepted: bool
    representation: Optional[Representation] = None
    certificate: Optional[Certificate] = None
    decomposition: Optional[Decomposition] = None

    @property
    def name(self) -> DecisionName:
        return DecisionName.ACCEPT if self.accepted else DecisionName.REJECT


class RecognizerService:
    """
    Decides whether a tree has a two-stab unit-square representation.

    Settings supply epsilon, the tail constant, the realization node
    budget and whether accepts are re-verified.
    """

    def __init__(self, settings: Optional[Settings] = None) -> None:
        self.settings = settings or get_settings()
        self.epsilon = self.settings.epsilon_value
        self.claw_constant = self.settings.claw_constant_value

    def recognize(self, t: Tree) -> Decision:
        decision = self._decide(t)
        if decision.accepted and self.settings.verify_accepts:
            assert decision.representation is not None
            report = verify(decision.representation, t)
            if not report.passed:
                raise InternalError(
                    "Recognizer produced a representation that fails verification",
                    context={"violations": report.lines()[:5]},
                )
        logger.debug(
            f"Recognized tree on {t.n} vertices: {decision.name.value}",
            extra={"certificate": decision.certificate.summary() if decision.certificate else None},
        )
        return decision

    def _decide(self, t: Tree) -> Decision:
        top = max_degree(t)
        if top > 4:
            heavy = next(v for v in range(t.n) if len(t.adjacency[v]) > 4)
            return Decision(False, certificate=Certificate.degree_exceeded(heavy))

        if top <= 2 or len(branch_vertices(t)) <= 1:
            return Decision(True, representation=layout_single_branch(t, self.epsilon))

        outcome = red_path_or_fail(t, red_edges(t))
        if outcome.kind is RedOutcomeKind.NOT_A_PATH:
            return Decision(False, certificate=Certificate.red_subgraph_not_path(outcome.witness))

        try:
            path = extended_red_path(t, outcome)
        except NoSpecialVertexError:
            return Decision(False, certificate=Certificate.no_special_vertex())
        try:
            decomposition = decompose(t, path)
        except MalformedPeripheryError as e:
            return Decision(False, certificate=Certificate.malformed_periphery(e.vertex))

        placed, certificate = self._place_all(t, decomposition)
        if placed is None and decomposition.path.k > 1:
            logger.debug("Retrying with the red path reversed")
            reverse = decomposition.reversed()
            placed, retry = self._place_all(t, reverse)
            if placed is not None:
                decomposition = reverse
            elif _out_of_nodes(retry) and not _out_of_nodes(certificate):
                certificate = retry
        if placed is None:
            assert certificate is not None
            if _out_of_nodes(certificate):
                logger.warning(
                    f"Stage a{certificate.stage} ran out of realization nodes, no verdict",
                    extra={"node_budget": self.settings.solver_node_budget},
                )
                raise SearchBudgetError(stage=certificate.stage, node_budget=self.settings.solver_node_budget)
            return Decision(False, certificate=certificate, decomposition=decomposition)
        return Decision(True, representation=placed.partial, decomposition=decomposition)

    def _place_all(
        self, t: Tree, d: Decomposition
    ) -> Tuple[Optional[PlacementState], Optional[Certificate]]:
        realizer = Realizer(
            t,
            d,
            self.epsilon,
            self.claw_constant,
            self.settings.solver_node_budget,
        )
        planner = StagePlanner(t, d, realizer)
        state = PlacementState.start(self.epsilon)
        for index in range(d.path.k):
            outcome = planner.place(state, index)
            if not outcome.candidates:
                return None, Certificate.stage_failure(index + 1, outcome.tried, outcome.violations)
            state = choose_optimized(outcome.candidates)
        logger.debug(
            f"Placed {d.path.k} red vertices",
            extra={"solver_calls": realizer.solver_calls},
        )
        return state.committed(), None


def _out_of_nodes(certificate: Optional[Certificate]) -> bool:
    return certificate is not None and SEARCH_BUDGET in certificate.violations


def recognize(t: Tree, settings: Optional[Settings] = None) -> Decision:
    """Decide a tree with the given (or global) settings."""
    return RecognizerService(settings).recognize(t)
