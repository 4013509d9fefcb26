"""Tests for the exact difference-constraint solver."""

from fractions import Fraction

import pytest

from suig2.oracle import (
    DifferenceSystem,
    Feasible,
    Infeasible,
    check_solution,
    solve_difference_system,
)


def test_tight_chain() -> None:
    ds = DifferenceSystem()
    ds.add("x1", "x0", 1)
    ds.add("x0", "x1", -1)
    solution = solve_difference_system(ds, anchor="x0")
    assert isinstance(solution, Feasible)
    assert solution.values == {"x0": 0, "x1": 1}


def test_strict_against_tight_is_infeasible() -> None:
    ds = DifferenceSystem()
    ds.add("x1", "x0", 1, strict=True)
    ds.add("x0", "x1", -1)
    solution = solve_difference_system(ds)
    assert isinstance(solution, Infeasible)
    assert len(solution.cycle) == 2
    assert solution.total == (Fraction(0), -1)


def test_negative_cycle_witness() -> None:
    ds = DifferenceSystem()
    ds.add("a", "b", 1)
    ds.add("b", "c", 1)
    ds.add("c", "a", -3)
    solution = solve_difference_system(ds)
    assert isinstance(solution, Infeasible)
    assert solution.total[0] < 0


def test_stab_boxes_with_one_cross_adjacency() -> None:
    eps = Fraction(1, 2)
    ds = DifferenceSystem(["0"])
    ds.add("up", "low", 1)
    ds.add_between("low", "0", 0, 1)
    ds.add_between("up", "0", 1 + eps, 2 + eps)

    least = solve_difference_system(ds, anchor="0")
    assert isinstance(least, Feasible)
    assert least.values["low"] == Fraction(1, 2)
    assert least.values["up"] == Fraction(3, 2)

    assert check_solution(ds, {"0": 0, "low": 1, "up": 1 + eps}) == []


def test_strict_constraints_keep_slack() -> None:
    ds = DifferenceSystem()
    ds.add("x1", "x0", 1, strict=True)
    ds.add("x0", "x1", 0, strict=True)
    solution = solve_difference_system(ds, anchor="x0")
    assert isinstance(solution, Feasible)
    assert 0 < solution.delta <= Fraction(1, 8)
    assert solution.values["x1"] - solution.values["x0"] >= solution.delta
    assert check_solution(ds, solution.values) == []


def test_empty_system() -> None:
    solution = solve_difference_system(DifferenceSystem())
    assert isinstance(solution, Feasible)
    assert solution.values == {}


def test_copy_is_independent() -> None:
    ds = DifferenceSystem()
    ds.add("a", "b", 0)
    clone = ds.copy()
    clone.add("b", "a", -1)
    assert len(ds) == 1
    assert isinstance(solve_difference_system(clone), Infeasible)


def test_chain_shrinks_the_slack() -> None:
    ds = DifferenceSystem()
    ds.add("x1", "x0", 1, strict=True)
    ds.add("x0", "x1", 0, strict=True)
    alone = solve_difference_system(ds, anchor="x0")
    chained = solve_difference_system(ds, anchor="x0", chain=10)
    assert isinstance(alone, Feasible) and isinstance(chained, Feasible)
    assert alone.delta == Fraction(1, 8)
    assert chained.delta == Fraction(1, 128)
    assert chained.values["x1"] == Fraction(1, 128)


def test_chain_must_be_positive() -> None:
    with pytest.raises(ValueError):
        solve_difference_system(DifferenceSystem(), chain=0)
