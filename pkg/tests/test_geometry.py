"""Tests for square representations, verification, span and path shapes."""

import random
from fractions import Fraction

import networkx as nx
import pytest

from builders import path_tree, star
from suig2.config import Settings
from suig2.core.exceptions import DisconnectedProjectionError, ParseError
from suig2.geometry import (
    ExtraEdge,
    MissingEdge,
    PathKind,
    Representation,
    Square,
    Stab,
    StabViolation,
    UncoveredVertex,
    classify_path,
    format_rational,
    independence_number,
    intersection_graph,
    parse_rational,
    shrinked_offsets,
    shrinked_span,
    span,
    verify,
)
from suig2.recognizer import recognize
from suig2.trees.tree import random_tree

HALF = Fraction(1, 2)
C = Fraction(1, 4)


def lower_line(xs) -> Representation:
    return Representation.from_squares(
        HALF, {v: Square(x, 0, Stab.LOWER) for v, x in enumerate(xs)}
    )


def five_cycle() -> Representation:
    """Squares a..e drawn as a five-cycle across both stabs."""
    f = Fraction
    return Representation.from_squares(
        HALF,
        {
            0: Square(4, f(1, 5), Stab.LOWER),
            1: Square(f(24, 5), 0, Stab.LOWER),
            2: Square(f(26, 5), f(7, 10), Stab.LOWER),
            3: Square(f(22, 5), f(3, 2), Stab.UPPER),
            4: Square(f(7, 2), 1, Stab.LOWER),
        },
    )


class TestRationals:
    @pytest.mark.parametrize(
        "text, expected",
        [("1/2", Fraction(1, 2)), ("3", Fraction(3)), (" -2/6 ", Fraction(-1, 3))],
    )
    def test_parse(self, text: str, expected: Fraction) -> None:
        assert parse_rational(text) == expected

    @pytest.mark.parametrize("text", ["", "1/0", "0.5", "a/b"])
    def test_parse_rejects(self, text: str) -> None:
        with pytest.raises(ParseError):
            parse_rational(text)

    def test_format(self) -> None:
        assert format_rational(Fraction(6, 3)) == "2"
        assert format_rational(Fraction(5, 4)) == "5/4"

    def test_independence_number(self) -> None:
        assert [independence_number(q) for q in range(1, 7)] == [1, 1, 2, 2, 3, 3]

    def test_shrinked_offsets(self) -> None:
        offsets = shrinked_offsets(4, C)
        eta = C / 2
        assert offsets == [0, eta, 1 + eta, 1 + 2 * eta]
        assert all(b - a <= 1 for a, b in zip(offsets, offsets[1:]))
        assert all(b - a > 1 for a, b in zip(offsets, offsets[2:]))

    def test_shrinked_span(self) -> None:
        assert shrinked_span(5, C) == 3 + C
        assert shrinked_span(1, C) == 1
        assert shrinked_span(0, C) == 0


class TestTouching:
    def test_boundary_contact_counts(self) -> None:
        assert set(intersection_graph(lower_line([0, 1])).edges) == {(0, 1)}

    def test_far_apart(self) -> None:
        r = lower_line([0, Fraction(5, 2)])
        assert intersection_graph(r).number_of_edges() == 0

    def test_five_cycle(self) -> None:
        graph = intersection_graph(five_cycle())
        assert nx.is_isomorphic(graph, nx.cycle_graph(5))
        assert {tuple(sorted(e)) for e in graph.edges} == {
            (0, 1), (1, 2), (2, 3), (3, 4), (0, 4),
        }

    def test_translation_keeps_the_intersection_graph(self, settings: Settings) -> None:
        rng = random.Random(23)
        checked = 0
        for _ in range(80):
            t = random_tree(rng.randint(2, 20), rng)
            decision = recognize(t, settings)
            if not decision.accepted:
                continue
            r = decision.representation
            moved = r.translate(Fraction(7, 3), Fraction(1, 5))
            before = {frozenset(e) for e in intersection_graph(r).edges}
            assert {frozenset(e) for e in intersection_graph(moved).edges} == before
            checked += 1
        assert checked > 0


class TestVerify:
    def test_tree_and_graph_sweeps_agree(self) -> None:
        r = lower_line([0, 1, HALF, 3])
        as_tree = verify(r, path_tree(4))
        as_graph = verify(r, nx.path_graph(4))
        assert as_tree.lines() == as_graph.lines()
        assert as_tree.of_type(ExtraEdge) == [ExtraEdge(0, 2)]
        assert as_tree.of_type(MissingEdge) == [MissingEdge(2, 3)]

    def test_unit_interval_path(self) -> None:
        assert verify(lower_line(range(5)), path_tree(5)).passed

    def test_moved_square_misses_edges(self) -> None:
        report = verify(lower_line([0, 1, 12, 3, 4]), path_tree(5))
        assert not report.passed
        assert set(report.of_type(MissingEdge)) == {MissingEdge(1, 2), MissingEdge(2, 3)}

    def test_extra_edge(self) -> None:
        report = verify(lower_line([0, 1, HALF]), path_tree(3))
        assert report.of_type(ExtraEdge) == [ExtraEdge(0, 2)]
        assert "ExtraEdge 0 2" in report.lines()

    def test_claw(self) -> None:
        r = Representation.from_squares(
            HALF,
            {
                0: Square(0, 1, Stab.LOWER),
                1: Square(-1, 0, Stab.LOWER),
                2: Square(1, 0, Stab.LOWER),
                3: Square(0, 1 + HALF, Stab.UPPER),
            },
        )
        assert verify(r, star(3)).passed

    def test_stab_violation(self) -> None:
        r = Representation.from_squares(
            HALF, {0: Square(0, 0, Stab.LOWER), 1: Square(1, 1, Stab.UPPER)}
        )
        assert verify(r, path_tree(2)).of_type(StabViolation) == [StabViolation(1)]

    def test_uncovered_vertex(self) -> None:
        report = verify(lower_line([0, 1]), path_tree(3))
        assert report.violations == (UncoveredVertex(2),)

    def test_five_cycle_against_a_graph(self) -> None:
        assert verify(five_cycle(), nx.cycle_graph(5)).passed

    def test_reflection_keeps_adjacency(self) -> None:
        r = five_cycle().reflect()
        assert r.square(3).stab is Stab.LOWER
        assert verify(r, nx.cycle_graph(5)).passed


class TestSpan:
    def test_stretched(self) -> None:
        assert span(lower_line(range(5)), range(5)) == 5

    def test_shrinked(self) -> None:
        r = lower_line(shrinked_offsets(5, C))
        assert span(r, range(5)) == 3 + C

    def test_single_vertex(self) -> None:
        assert span(lower_line([7]), [0]) == 1

    def test_gap(self) -> None:
        with pytest.raises(DisconnectedProjectionError):
            span(lower_line([0, 3]), [0, 1])


class TestClassifyPath:
    def test_lower_right_stretched(self) -> None:
        shape = classify_path(lower_line([0, 1, 2]), [0, 1, 2])
        assert shape.kind is PathKind.LOWER_RIGHT
        assert shape.stretched
        assert shape.monotone

    def test_upper_left_stretched(self) -> None:
        r = Representation.from_squares(
            HALF, {v: Square(2 - v, 1 + HALF, Stab.UPPER) for v in range(3)}
        )
        shape = classify_path(r, [0, 1, 2])
        assert shape.kind is PathKind.UPPER_LEFT
        assert shape.stretched

    def test_folded(self) -> None:
        r = lower_line([1, 0, Fraction(3, 2)])
        assert classify_path(r, [0, 1, 2]).kind is PathKind.FOLDED

    def test_shrinked(self) -> None:
        r = lower_line(shrinked_offsets(4, C))
        shape = classify_path(r, [0, 1, 2, 3], C)
        assert shape.kind is PathKind.LOWER_RIGHT
        assert shape.shrinked
        assert not shape.stretched

    def test_mixed_stabs(self) -> None:
        r = Representation.from_squares(
            HALF, {0: Square(0, 0, Stab.LOWER), 1: Square(1, 1 + HALF, Stab.UPPER)}
        )
        assert classify_path(r, [0, 1]).kind is PathKind.MIXED
