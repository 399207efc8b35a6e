"""
Property Suite Tests
====================

Short seeded runs of every suite. A failure here means a construction and
its oracle disagree on a random instance; the report names the instance so
it can be replayed with `polycalc check <suite> --seed <s>`.
"""
import numpy as np
import pytest

from polycalc.polyhedron import is_empty
from polycalc.suites import (
    LP_MAX_ROWS, SUITE_REGISTRY, random_hrep, random_lp_instance, random_nonempty_hrep,
    random_simplex, run_suite,
)


@pytest.mark.parametrize("name", sorted(SUITE_REGISTRY))
def test_suite_passes(name):
    report = run_suite(name, seed=0, count=4)
    assert report["count"] == 4
    assert report["failed"] == 0, report["failures"]
    assert report["passed"] == 4


class TestReport:

    def test_deterministic(self):
        assert run_suite("relint", seed=7, count=3) == run_suite("relint", seed=7, count=3)

    def test_unknown_suite(self):
        with pytest.raises(KeyError):
            run_suite("nonesuch", count=1)

    @pytest.mark.parametrize("count", [0, -2])
    def test_count_below_one(self, count):
        with pytest.raises(ValueError, match="at least 1"):
            run_suite("lp", count=count)

    def test_layout(self):
        report = run_suite("roundtrip", seed=1, count=2)
        assert set(report) == {"suite", "seed", "count", "passed", "failed", "failures"}
        assert report["suite"] == "roundtrip" and report["seed"] == 1


class TestGenerators:

    def test_random_hrep_is_seeded(self):
        a = random_hrep(np.random.default_rng([3, 0]), 3, 6)
        b = random_hrep(np.random.default_rng([3, 0]), 3, 6)
        assert a == b
        assert a.dim == 3 and 1 <= a.n_eq + a.n_ineq <= 6

    def test_coefficients_are_small(self):
        P = random_hrep(np.random.default_rng(0), 4, 8)
        for a, b in P.eq_rows() + P.ineq_rows():
            assert all(abs(v) <= 3 for v in a)
            assert -1 <= b <= 3

    def test_nonempty(self):
        rng = np.random.default_rng(2)
        for _ in range(5):
            assert not is_empty(random_nonempty_hrep(rng, 2, 6))

    def test_simplex(self):
        S = random_simplex(2)
        assert S.n_ineq == 3
        assert S.contains((-3, -3)) and S.contains((3, 0)) and S.contains((-3, 6))
        assert not S.contains((4, 0)) and not S.contains((-4, 0))

    def test_lp_instances_stay_small(self):
        rng = np.random.default_rng(11)
        for _ in range(40):
            P, c = random_lp_instance(rng)
            assert P.n_eq + P.n_ineq <= LP_MAX_ROWS == 6
            assert len(c) == P.dim
