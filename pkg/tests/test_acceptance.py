"""
Acceptance runs: oracle equivalence, soundness, known verdicts, output
shape invariants and linear running time.

The long runs are marked slow; enable them with --run-slow.
"""

import random
import statistics
import time
from fractions import Fraction
from typing import List

import pytest

from builders import comb, long_double_spider, path_tree, spider, star, three_claw_star
from suig2.config import Settings
from suig2.geometry import classify_path, emit_json, span, verify
from suig2.oracle import SearchConfig
from suig2.oracle.crosscheck import cross_check, fuzz_soundness
from suig2.recognizer import Decision, recognize
from suig2.schemas.documents import CertificateKind
from suig2.trees.tree import Tree, branch_vertices, degree, random_tree


def shape_violations(t: Tree, decision: Decision, c: Fraction) -> List[str]:
    """Canonical-shape checks for an accept that went through the stage loop."""
    found: List[str] = []
    r, d = decision.representation, decision.decomposition
    if d is None:
        return found
    red = d.red
    xs = [r.square(v).x for v in red]
    steps = {b - a for a, b in zip(xs, xs[1:])}
    if steps and steps != {1}:
        found.append(f"red x steps {sorted(steps)}")
    if span(r, red) != len(red):
        found.append("red path not stretched")
    for a, b in zip(red, red[1:]):
        if r.square(a).stab is not r.square(b).stab:
            if degree(t, a) < 3 or degree(t, b) < 3:
                found.append(f"bridge {a}-{b} has a non-branch end")
        elif degree(t, a) == 4 and degree(t, b) == 4:
            found.append(f"degree-4 pair {a}-{b} shares a stab")
    for z, tails in d.tails.items():
        for tail in tails:
            if len(tail) < 2:
                continue
            shape = classify_path(r, tail, c)
            if not (shape.monotone and shape.shrinked):
                found.append(f"tail of {z} is {shape.kind.value}")
    return found


def known_trees() -> List[Tree]:
    rng = random.Random(5)
    trees = [path_tree(n) for n in (1, 2, 7, 30)]
    trees += [star(5), three_claw_star()]
    for _ in range(20):
        legs = [rng.randint(1, 12) for _ in range(rng.randint(3, 4))]
        trees.append(spider(legs))
    return trees


class TestKnownVerdicts:
    @pytest.mark.parametrize("epsilon", ["1/2", "1/4"])
    def test_verdicts(self, epsilon: str) -> None:
        settings = Settings(_env_file=None, epsilon=epsilon)
        for t in known_trees():
            decision = recognize(t, settings)
            if t.n == 6 and max(map(len, t.adjacency)) == 5:
                assert decision.certificate.kind is CertificateKind.DEGREE_EXCEEDED
            elif len(branch_vertices(t)) > 1:
                assert decision.certificate.kind is CertificateKind.RED_SUBGRAPH_NOT_PATH
            else:
                assert decision.accepted
                assert verify(decision.representation, t).passed

    def test_shapes_on_random_accepts(self, settings: Settings) -> None:
        rng = random.Random(17)
        c = settings.claw_constant_value
        for _ in range(60):
            t = random_tree(rng.randint(5, 24), rng)
            decision = recognize(t, settings)
            if decision.accepted:
                assert shape_violations(t, decision, c) == []


@pytest.mark.slow
class TestLongRuns:
    @pytest.mark.parametrize("epsilon", ["1/2", "1/4"])
    def test_oracle_equivalence(self, epsilon: str) -> None:
        settings = Settings(_env_file=None, epsilon=epsilon)
        report = cross_check(SearchConfig(max_n=9, epsilon=settings.epsilon_value), settings)
        assert len(report.rows) == 95
        assert report.mismatches == []

    def test_soundness(self, settings: Settings) -> None:
        report = fuzz_soundness(10_000, 60, seed=2024, settings=settings)
        assert report.checked == 10_000
        assert report.failures == []

    def test_shapes(self, settings: Settings) -> None:
        rng = random.Random(99)
        c = settings.claw_constant_value
        for _ in range(2_000):
            t = random_tree(rng.randint(5, 60), rng)
            decision = recognize(t, settings)
            if decision.accepted:
                assert shape_violations(t, decision, c) == [], t.edges

    def test_deterministic_documents(self, settings: Settings) -> None:
        rng = random.Random(8)
        for _ in range(200):
            t = random_tree(rng.randint(5, 40), rng)
            first, second = recognize(t, settings), recognize(t, settings)
            assert first.accepted is second.accepted
            if first.accepted:
                assert emit_json(first.representation) == emit_json(second.representation)

    def test_linear_time_on_paths(self, settings: Settings) -> None:
        def median_seconds(n: int) -> float:
            t = path_tree(n)
            samples = []
            for _ in range(5):
                start = time.perf_counter()
                decision = recognize(t, settings)
                samples.append(time.perf_counter() - start)
                assert decision.accepted
            return statistics.median(samples)

        small, large = median_seconds(100_000), median_seconds(1_000_000)
        assert large < 2.0
        assert large < 15 * small

    def test_linear_time_on_long_red_paths(self, settings: Settings) -> None:
        def seconds(spine: int) -> float:
            t = comb(spine)
            start = time.perf_counter()
            decision = recognize(t, settings)
            elapsed = time.perf_counter() - start
            assert decision.accepted
            return elapsed

        small, large = seconds(125), seconds(500)
        assert large < 8 * small

    def test_linear_time_on_long_tails(self, settings: Settings) -> None:
        def seconds(leg: int) -> float:
            t = long_double_spider(leg)
            start = time.perf_counter()
            decision = recognize(t, settings)
            elapsed = time.perf_counter() - start
            assert decision.accepted
            return elapsed

        small, large = seconds(250), seconds(1_000)
        assert large < 8 * small
