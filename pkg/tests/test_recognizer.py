"""Tests for the recognizer: stages, conditions, choice and the service."""

import random
from fractions import Fraction
from typing import List

import pytest

from builders import (
    comb,
    double_spider,
    double_star,
    long_double_spider,
    path_tree,
    spider,
    star,
    three_claw_star,
)
from suig2.config import Settings
from suig2.geometry import (
    PathKind,
    Square,
    Stab,
    classify_path,
    emit_json,
    shrinked_offsets,
    verify,
)
from suig2.recognizer import (
    Certificate,
    Corner,
    PlacementState,
    RecognizerService,
    StabRelation,
    StagePlanner,
    choose_optimized,
    layout_single_branch,
    recognize,
    stab_of_a2,
    tail_budget,
)
from suig2.recognizer.conditions import (
    LOWER_RIGHT,
    UPPER_LEFT,
    UPPER_RIGHT,
    StageView,
    evaluate,
    first_stage_conditions,
)
from suig2.core.exceptions import SearchBudgetError
from suig2.oracle.difference import solve_difference_system
from suig2.recognizer import realize as realize_module
from suig2.recognizer.realize import GEOMETRY, SEARCH_BUDGET, Realizer, Unrealizable
from suig2.recognizer.stages import next_stab_options
from suig2.recognizer.state import AgentPlacement, Canvas, StageChoice, TailSlot, tail_slots
from suig2.schemas.documents import CertificateKind
from suig2.trees.red import decompose, extended_red_path, red_edges, red_path_or_fail
from suig2.trees.tree import random_tree, relabel

HALF = Fraction(1, 2)


def planner_for(t, settings: Settings) -> StagePlanner:
    d = decompose(t, extended_red_path(t, red_path_or_fail(t, red_edges(t))))
    realizer = Realizer(
        t, d, settings.epsilon_value, settings.claw_constant_value, settings.solver_node_budget
    )
    return StagePlanner(t, d, realizer)


def empty_state() -> PlacementState:
    return PlacementState.start(HALF)


def state_with(extent, penalty: int = 0, agent: int = 1) -> PlacementState:
    choice = StageChoice(
        index=0,
        red=0,
        red_stab=Stab.LOWER,
        next_stab=Stab.LOWER,
        placements=(
            AgentPlacement(
                agent, Corner.LOWER_LEFT, TailSlot(Stab.LOWER, -1), TailSlot(Stab.UPPER, -1), 0, 0
            ),
        ),
    )
    return PlacementState(
        canvas=Canvas(HALF),
        last=choice,
        stages=1,
        extent=extent,
        preference_penalty=penalty,
    )


class TestStabRules:
    @pytest.mark.parametrize(
        "d1, d2, expected",
        [(4, 4, StabRelation.DIFFERENT), (3, 4, StabRelation.SAME), (2, 2, StabRelation.SAME)],
    )
    def test_stab_of_a2(self, d1: int, d2: int, expected: StabRelation) -> None:
        assert stab_of_a2(d1, d2) is expected

    def test_next_stab_options(self) -> None:
        assert next_stab_options(Stab.LOWER, 4, 4) == (Stab.UPPER,)
        assert next_stab_options(Stab.UPPER, 3, 2) == (Stab.UPPER,)
        assert next_stab_options(Stab.LOWER, 3, 4) == (Stab.LOWER, Stab.UPPER)

    def test_tail_slots(self) -> None:
        assert tail_slots(Corner.LOWER_LEFT, Stab.LOWER) == (
            TailSlot(Stab.LOWER, -1),
            TailSlot(Stab.UPPER, -1),
        )
        assert tail_slots(Corner.UPPER_LEFT, Stab.LOWER) == (
            TailSlot(Stab.UPPER, -1),
            TailSlot(Stab.UPPER, 1),
        )

    def test_corner_reflection(self) -> None:
        assert Corner.LOWER_LEFT.reflected() is Corner.UPPER_LEFT
        assert Corner.LOWER_RIGHT.reflected() is Corner.UPPER_RIGHT


class TestTailBudget:
    @pytest.mark.parametrize(
        "case, m, alpha_v, alpha_w, expected",
        [(3, 2, 2, 2, True), (1, 1, 1, 1, False), (3, 0, 1, 1, True), (2, 1, 1, 1, True)],
    )
    def test_examples(self, case: int, m: int, alpha_v: int, alpha_w: int, expected: bool) -> None:
        assert tail_budget(case, m, alpha_v, alpha_w) is expected

    def test_unknown_case(self) -> None:
        with pytest.raises(ValueError):
            tail_budget(5, 1, 1, 1)


class TestConditions:
    def test_long_tails_in_the_lower_right_corner(self) -> None:
        placement = AgentPlacement(7, Corner.LOWER_RIGHT, LOWER_RIGHT, UPPER_RIGHT, 2, 1)
        view = StageView(Stab.LOWER, {Corner.LOWER_RIGHT: placement})
        assert evaluate(first_stage_conditions(4, 4), view) == (["first.case1.4"], 0)

    def test_preference_adds_a_penalty(self) -> None:
        roles = {
            Corner.UPPER_LEFT: AgentPlacement(5, Corner.UPPER_LEFT, UPPER_LEFT, UPPER_RIGHT, 0, 0),
            Corner.UPPER_RIGHT: AgentPlacement(6, Corner.UPPER_RIGHT, UPPER_LEFT, UPPER_RIGHT, 0, 0),
        }
        assert evaluate(first_stage_conditions(3, 2), StageView(Stab.LOWER, roles)) == ([], 1)

    def test_unlisted_degrees_have_no_conditions(self) -> None:
        assert first_stage_conditions(2, 2) == []

    def test_view_in_the_mirrored_frame(self) -> None:
        choice = StageChoice(
            index=1,
            red=3,
            red_stab=Stab.LOWER,
            next_stab=Stab.LOWER,
            placements=(AgentPlacement(9, Corner.LOWER_LEFT, LOWER_RIGHT, UPPER_RIGHT, 1, 0),),
        )
        view = StageView.of(choice, reflect=True)
        assert view.upper
        assert view.has(Corner.UPPER_LEFT)
        assert view.lt_in(Corner.UPPER_LEFT, UPPER_RIGHT)


class TestChooseOptimized:
    def test_singleton(self) -> None:
        only = state_with(3)
        assert choose_optimized([only]) is only

    def test_smaller_extent_wins(self) -> None:
        far, near = state_with(5), state_with(4 + Fraction(1, 4))
        assert choose_optimized([far, near]) is near

    def test_preference_breaks_ties(self) -> None:
        kept, broken = state_with(2), state_with(2, penalty=1)
        assert choose_optimized([broken, kept]) is kept

    def test_role_assignment_breaks_ties(self) -> None:
        first, second = state_with(2, agent=3), state_with(2, agent=8)
        assert choose_optimized([second, first]) is first
        assert choose_optimized([first, second]) is first

    def test_empty(self) -> None:
        with pytest.raises(ValueError):
            choose_optimized([])


class TestStages:
    def test_first_stage_with_two_leaf_agents(self, settings: Settings) -> None:
        planner = planner_for(double_spider(), settings)
        outcome = planner.place_a1(empty_state())
        assert outcome.tried == 6
        assert outcome.candidates
        chosen = choose_optimized(outcome.candidates)
        assert chosen.partial.square(0).x == 1
        assert chosen.partial.square(1).x == 2

    def test_degree_two_middle_stage_has_one_candidate(self, settings: Settings) -> None:
        planner = planner_for(double_spider(), settings)
        state = choose_optimized(planner.place_a1(empty_state()).candidates)
        outcome = planner.place_middle(state, 1)
        assert outcome.tried == 1
        assert len(outcome.candidates) == 1

    def test_last_stage(self, settings: Settings) -> None:
        planner = planner_for(double_spider(), settings)
        state = empty_state()
        for index in range(4):
            state = choose_optimized(planner.place(state, index).candidates)
        outcome = planner.place_ak(state)
        assert outcome.tried == 6
        assert outcome.candidates

    def test_out_of_order_calls(self, settings: Settings) -> None:
        planner = planner_for(double_spider(), settings)
        with pytest.raises(ValueError):
            planner.place_middle(empty_state(), 1)
        with pytest.raises(ValueError):
            planner.place_ak(empty_state())
        with pytest.raises(ValueError):
            planner.place_a1_singleton(empty_state())


class TestSingleBranchLayout:
    def test_single_vertex(self) -> None:
        r = layout_single_branch(path_tree(1), HALF)
        assert len(r) == 1

    def test_path(self) -> None:
        r = layout_single_branch(path_tree(5), HALF)
        assert [r.square(v).x for v in range(5)] == [0, 1, 2, 3, 4]
        assert all(r.square(v).stab is Stab.LOWER for v in range(5))

    @pytest.mark.parametrize("legs", [[1, 1, 1], [2, 2, 2, 2], [1, 2, 3, 4], [5, 1, 3]])
    def test_spiders(self, legs) -> None:
        t = spider(legs)
        assert verify(layout_single_branch(t, HALF), t).passed

    def test_two_branch_vertices(self) -> None:
        with pytest.raises(ValueError):
            layout_single_branch(double_star(2, 2), HALF)


class TestRecognize:
    def test_path_accepts_on_one_line(self, settings: Settings) -> None:
        decision = recognize(path_tree(5), settings)
        assert decision.accepted
        assert [decision.representation.square(v).x for v in range(5)] == [0, 1, 2, 3, 4]

    def test_five_leaf_star(self, settings: Settings) -> None:
        decision = recognize(star(5), settings)
        assert not decision.accepted
        assert decision.certificate == Certificate.degree_exceeded(0)

    def test_three_claw_star(self, settings: Settings) -> None:
        decision = recognize(three_claw_star(), settings)
        assert decision.certificate.kind is CertificateKind.RED_SUBGRAPH_NOT_PATH
        assert decision.certificate.vertices == (0,)

    def test_subdivided_star(self, settings: Settings) -> None:
        t = spider([1, 2, 3, 4])
        decision = recognize(t, settings)
        assert decision.accepted
        assert verify(decision.representation, t).passed

    def test_h_shaped_tree(self, settings: Settings) -> None:
        t = double_star(2, 2)
        decision = recognize(t, settings)
        assert decision.accepted
        assert decision.decomposition.red == (0,)
        assert verify(decision.representation, t).passed

    def test_double_spider(self, settings: Settings) -> None:
        t = double_spider()
        decision = recognize(t, settings)
        assert decision.accepted
        assert verify(decision.representation, t).passed

    def test_red_path_is_stretched(self, settings: Settings) -> None:
        decision = recognize(double_spider(), settings)
        r = decision.representation
        red = decision.decomposition.red
        assert [r.square(v).x for v in red] == [1, 2, 3, 4, 5]
        shape = classify_path(r, red)
        assert shape.kind is PathKind.LOWER_RIGHT
        assert shape.stretched

    def test_smaller_epsilon(self, quarter_settings: Settings) -> None:
        t = double_spider()
        decision = recognize(t, quarter_settings)
        assert decision.accepted
        assert decision.representation.epsilon == Fraction(1, 4)
        assert verify(decision.representation, t).passed

    def test_deterministic_output(self, settings: Settings) -> None:
        service = RecognizerService(settings)
        first = service.recognize(double_spider())
        second = service.recognize(double_spider())
        assert emit_json(first.representation) == emit_json(second.representation)

    def test_relabeling_keeps_the_decision(self, settings: Settings) -> None:
        rng = random.Random(11)
        for t in (double_spider(), three_claw_star(), star(5)):
            expected = recognize(t, settings).accepted
            permutation = list(range(t.n))
            rng.shuffle(permutation)
            assert recognize(relabel(t, permutation), settings).accepted is expected

    def test_accepts_are_sound_on_random_trees(self, settings: Settings) -> None:
        rng = random.Random(3)
        for _ in range(40):
            t = random_tree(rng.randint(1, 14), rng)
            decision = recognize(t, settings)
            if decision.accepted:
                assert verify(decision.representation, t).passed
            else:
                assert decision.certificate is not None


class TestCertificate:
    def test_stage_failure_sorts_violations(self) -> None:
        certificate = Certificate.stage_failure(2, 6, ["middle.4", "geometry", "middle.4"])
        assert certificate.violations == ("geometry", "middle.4")
        assert certificate.summary() == "StageFailure at a2 after 6 candidates"

    def test_document(self) -> None:
        document = Certificate.degree_exceeded(3).to_document()
        assert document.kind is CertificateKind.DEGREE_EXCEEDED
        assert document.vertices == [3]
        assert Certificate.degree_exceeded(3).summary() == "DegreeExceeded at 3"


class TestCanvas:
    def test_near_reads_neighbouring_columns(self) -> None:
        canvas = Canvas(HALF)
        canvas.commit(
            {
                0: Square(0, 0, Stab.LOWER),
                1: Square(Fraction(3, 2), 0, Stab.LOWER),
                2: Square(3, 0, Stab.LOWER),
            }
        )
        assert sorted(canvas.near(1)) == [0, 1]
        assert sorted(canvas.near(Fraction(5, 2))) == [1, 2]
        assert list(canvas.near(-2)) == []

    def test_commit_moves_an_overridden_square(self) -> None:
        canvas = Canvas(HALF)
        canvas.commit({0: Square(0, 0, Stab.LOWER)})
        canvas.commit({0: Square(5, 0, Stab.LOWER)})
        assert len(canvas) == 1
        assert list(canvas.near(0)) == []
        assert list(canvas.near(5)) == [0]

    def test_committed_state_shares_the_canvas(self) -> None:
        state = PlacementState(canvas=Canvas(HALF), fresh={3: Square(2, 0, Stab.LOWER)})
        assert set(state.fresh) == {3}
        assert 3 not in state.canvas
        done = state.committed()
        assert done.fresh == {}
        assert done.canvas is state.canvas
        assert done.canvas.square(3) == Square(2, 0, Stab.LOWER)
        assert done.partial.square(3).x == 2


class TestLongPaths:
    @pytest.mark.parametrize("spine", [40, 64])
    def test_comb_is_accepted(self, settings: Settings, spine: int) -> None:
        t = comb(spine)
        decision = recognize(t, settings)
        assert decision.accepted, decision.certificate
        assert verify(decision.representation, t).passed
        red = decision.decomposition.red
        assert [decision.representation.square(v).x for v in red] == list(range(1, len(red) + 1))

    def test_comb_keeps_red_squares_inside_their_boxes(self, settings: Settings) -> None:
        decision = recognize(comb(48), settings)
        r = decision.representation
        for v in decision.decomposition.red:
            sq = r.square(v)
            low = 0 if sq.stab is Stab.LOWER else 1 + r.epsilon
            assert low <= sq.y <= low + 1

    def test_long_legs_are_accepted(self, settings: Settings) -> None:
        t = long_double_spider(30)
        decision = recognize(t, settings)
        assert decision.accepted, decision.certificate
        assert verify(decision.representation, t).passed

    def test_tails_are_laid_out_as_rigid_blocks(self, settings: Settings) -> None:
        planner = planner_for(long_double_spider(10), settings)
        r = choose_optimized(planner.place_a1(empty_state()).candidates).partial
        d = planner.d
        offsets = shrinked_offsets(9, settings.claw_constant_value)
        for z in d.agents[d.red[0]]:
            tail = d.tails[z].long
            head = r.square(tail[0]).x
            direction = 1 if r.square(tail[-1]).x > head else -1
            assert [r.square(v).x - head for v in tail] == [direction * o for o in offsets]

    def test_leg_length_does_not_grow_the_systems(
        self, settings: Settings, monkeypatch: pytest.MonkeyPatch
    ) -> None:
        sizes: List[int] = []

        def recording(ds, anchor=None, chain=1):  # type: ignore[no-untyped-def]
            sizes.append(len(ds.variables))
            return solve_difference_system(ds, anchor=anchor, chain=chain)

        monkeypatch.setattr(realize_module, "solve_difference_system", recording)
        largest = []
        for leg in (8, 80):
            sizes.clear()
            assert recognize(long_double_spider(leg), settings).accepted
            largest.append(max(sizes))
        assert largest[1] <= largest[0]
        assert largest[1] < 40


class TestOrientationRetry:
    def test_reversed_decomposition_is_returned(
        self, settings: Settings, monkeypatch: pytest.MonkeyPatch
    ) -> None:
        original = RecognizerService._place_all
        calls = []

        def fail_first(self, t, d):  # type: ignore[no-untyped-def]
            calls.append(d.red)
            if len(calls) == 1:
                return None, Certificate.stage_failure(1, 1, [GEOMETRY])
            return original(self, t, d)

        monkeypatch.setattr(RecognizerService, "_place_all", fail_first)
        t = double_spider()
        decision = RecognizerService(settings).recognize(t)
        assert decision.accepted
        assert decision.decomposition.red == tuple(reversed(calls[0]))
        r = decision.representation
        assert [r.square(v).x for v in decision.decomposition.red] == [1, 2, 3, 4, 5]

    def test_geometry_failures_reject(
        self, settings: Settings, monkeypatch: pytest.MonkeyPatch
    ) -> None:
        monkeypatch.setattr(Realizer, "realize", lambda self, canvas, choice: Unrealizable(GEOMETRY))
        decision = recognize(double_spider(), settings)
        assert not decision.accepted
        assert decision.certificate.kind is CertificateKind.STAGE_FAILURE
        assert "geometry" in decision.certificate.violations

    def test_exhausted_search_gives_no_verdict(
        self, settings: Settings, monkeypatch: pytest.MonkeyPatch
    ) -> None:
        monkeypatch.setattr(
            Realizer, "realize", lambda self, canvas, choice: Unrealizable(SEARCH_BUDGET)
        )
        with pytest.raises(SearchBudgetError) as info:
            recognize(double_spider(), settings)
        assert info.value.exit_code == 3
        assert info.value.stage == 1
