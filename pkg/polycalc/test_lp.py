"""
Simplex Tests
=============
"""
from fractions import Fraction

import numpy as np
import pytest

from polycalc.exact_linalg import dot, neg
from polycalc.lp import LPStatus, Sense, feasible, feasible_point, solve_lp
from polycalc.representation import HRep
from polycalc.suites import random_hrep


def interval(lo, hi):
    return HRep.from_rows(1, ineq=[((-1,), -lo), ((1,), hi)])


class TestSolveLP:

    def test_single_active_constraint(self):
        res = solve_lp((1,), HRep.from_rows(1, ineq=[((-1,), -2)]))
        assert res.status == LPStatus.OPTIMAL
        assert res.value == 2
        assert res.point == (2,)

    def test_infeasible(self):
        P = HRep.from_rows(1, ineq=[((1,), 0), ((-1,), -1)])
        assert solve_lp((1,), P).status == LPStatus.INFEASIBLE

    def test_unbounded_with_ray(self):
        res = solve_lp((-1,), HRep.from_rows(1, ineq=[((-1,), 0)]))
        assert res.status == LPStatus.UNBOUNDED
        assert res.ray[0] > 0

    def test_maximize(self):
        square = HRep.from_rows(2, ineq=[((-1, 0), 0), ((1, 0), 1), ((0, -1), 0), ((0, 1), 1)])
        res = solve_lp((1, 2), square, Sense.MAX)
        assert res.value == 3
        assert res.point == (1, 1)

    def test_equalities_are_respected(self):
        # x + y = 1, x, y >= 0; min x - y hits (0, 1)
        P = HRep.from_rows(2, eq=[((1, 1), 1)], ineq=[((-1, 0), 0), ((0, -1), 0)])
        res = solve_lp((1, -1), P)
        assert res.value == -1
        assert res.point == (0, 1)

    def test_fractional_optimum(self):
        P = HRep.from_rows(2, ineq=[((2, 1), 1), ((1, 3), 1), ((-1, 0), 0), ((0, -1), 0)])
        res = solve_lp((1, 1), P, Sense.MAX)
        assert res.value == Fraction(3, 5)
        assert dot((1, 1), res.point) == res.value

    def test_degenerate_vertex_terminates(self):
        # three constraints through the origin of the positive quadrant
        P = HRep.from_rows(2, ineq=[((-1, 0), 0), ((0, -1), 0), ((-1, -1), 0), ((1, 1), 2)])
        res = solve_lp((-1, -1), P)
        assert res.value == -2

    def test_dimension_check(self):
        with pytest.raises(ValueError):
            solve_lp((1, 1), interval(0, 1))


class TestFeasible:

    def test_interval(self):
        assert feasible(interval(0, 1))

    def test_contradiction(self):
        assert not feasible(HRep.from_rows(1, ineq=[((1,), -1), ((-1,), -1)]))

    def test_whole_space(self):
        assert feasible(HRep.whole_space(3))

    def test_feasible_point(self):
        P = interval(Fraction(1, 3), 5)
        assert P.contains(feasible_point(P))
        assert feasible_point(HRep.empty(2)) is None


def test_max_is_negated_min_of_negated_objective():
    rng = np.random.default_rng(31)
    for _ in range(40):
        dim = int(rng.integers(1, 4))
        P = random_hrep(rng, dim, 5)
        c = tuple(Fraction(int(v)) for v in rng.integers(-3, 4, size=dim))
        hi = solve_lp(c, P, Sense.MAX)
        lo = solve_lp(neg(c), P, Sense.MIN)
        assert hi.status == lo.status
        if hi.status == LPStatus.OPTIMAL:
            assert hi.value == -lo.value
            assert dot(c, hi.point) == hi.value
