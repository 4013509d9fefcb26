"""Brute-force decision procedure and the exact difference solver behind it."""

from suig2.oracle.difference import (
    DifferenceConstraint,
    DifferenceSystem,
    Feasible,
    Infeasible,
    check_solution,
    solve_difference_system,
)
from suig2.oracle.search import OracleResult, SearchConfig, SearchStats, brute_force_2suig

__all__ = [
    "DifferenceConstraint",
    "DifferenceSystem",
    "Feasible",
    "Infeasible",
    "OracleResult",
    "SearchConfig",
    "SearchStats",
    "brute_force_2suig",
    "check_solution",
    "solve_difference_system",
]
