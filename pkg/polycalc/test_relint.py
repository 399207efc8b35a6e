"""
Relative Interior Tests
=======================
"""
from fractions import Fraction

import numpy as np
import pytest

from polycalc.errors import EmptySetError
from polycalc.exact_linalg import scale
from polycalc.multifunction import MultiFn
from polycalc.oracle import iri_member_oracle, sample_points
from polycalc.polyhedron import HRep, h_to_v, member, remove_redundancy
from polycalc.relint import (
    binding_index_set, relative_interior, relative_interior_point, ri_domain,
    ri_graph_member_decomposed, ri_member, strict_witnesses,
)
from polycalc.suites import random_nonempty_hrep

H = HRep.from_rows

SEGMENT = H(2, ineq=[((-1, 0), 0), ((1, 0), 1), ((0, 1), 0), ((0, -1), 0)])
POINT = H(1, ineq=[((1,), 0), ((-1,), 0)])
SQUARE = H(2, ineq=[((-1, 0), 0), ((1, 0), 1), ((0, -1), 0), ((0, 1), 1)])
TRIANGLE_GRAPH = MultiFn.from_blocks(
    1, 1, ineq=[((-1,), (0,), 0), ((1,), (0,), 1), ((0,), (-1,), 0), ((-1,), (1,), 0)])   # 0 <= y <= x <= 1
HALF = Fraction(1, 2)


class TestBindingIndexSet:

    def test_segment(self):
        assert binding_index_set(SEGMENT) == (0, 1)

    def test_point(self):
        assert binding_index_set(POINT) == ()

    def test_full_dimensional(self):
        assert binding_index_set(SQUARE) == (0, 1, 2, 3)

    def test_witnesses_are_strict(self):
        rows = SQUARE.ineq_rows()
        for i, x in strict_witnesses(SQUARE).items():
            assert member(SQUARE, x)
            assert rows[i][0][0] * x[0] + rows[i][0][1] * x[1] < rows[i][1]

    def test_unbounded_rows_get_witnesses(self):
        quadrant = H(2, ineq=[((-1, 0), 0), ((0, -1), 0)])
        assert binding_index_set(quadrant) == (0, 1)

    def test_empty_set(self):
        with pytest.raises(EmptySetError, match="undefined on empty set"):
            binding_index_set(H(1, ineq=[((1,), -1), ((-1,), -1)]))


class TestRelativeInterior:

    def test_segment(self):
        ri = relative_interior(SEGMENT)
        assert ri.contains((HALF, 0))
        assert not ri.contains((0, 0))
        assert not ri.contains((HALF, Fraction(1, 10)))

    def test_point(self):
        ri = relative_interior(POINT)
        assert ri.strict_C.nrows == 0
        assert ri.contains((0,)) and not ri.contains((1,))

    def test_whole_space(self):
        ri = relative_interior(HRep.whole_space(2))
        assert ri.contains((5, -5))

    def test_interior_point(self):
        for P in (SEGMENT, POINT, SQUARE, HRep.whole_space(3)):
            x = relative_interior_point(P)
            assert relative_interior(P).contains(x)
            assert ri_member(P, x)


class TestRiMember:

    def test_segment(self):
        assert ri_member(SEGMENT, (HALF, 0))
        assert not ri_member(SEGMENT, (0, 0))
        assert not ri_member(SEGMENT, (2, 0))

    def test_agrees_with_cone_test(self):
        for P in (SEGMENT, SQUARE):
            for x in ((0, 0), (HALF, 0), (1, 0), (HALF, HALF), (1, HALF)):
                if member(P, x):
                    assert ri_member(P, x) == iri_member_oracle(P, x)

    def test_empty_set(self):
        with pytest.raises(EmptySetError):
            ri_member(H(1, ineq=[((0,), -1)]), (0,))


class TestGraphDecomposition:

    def test_interior(self):
        assert ri_graph_member_decomposed(TRIANGLE_GRAPH, (HALF,), (Fraction(1, 4),))
        assert ri_member(TRIANGLE_GRAPH.graph, (HALF, Fraction(1, 4)))

    def test_boundary_of_value(self):
        assert not ri_graph_member_decomposed(TRIANGLE_GRAPH, (HALF,), (HALF,))
        assert not ri_member(TRIANGLE_GRAPH.graph, (HALF, HALF))

    def test_outside_domain(self):
        assert not ri_graph_member_decomposed(TRIANGLE_GRAPH, (2,), (0,))

    def test_ri_domain(self):
        ri = ri_domain(TRIANGLE_GRAPH)
        assert ri.contains((HALF,)) and not ri.contains((1,))


class TestCaching:

    def test_index_set_computed_once_per_set(self):
        binding_index_set.cache_clear()
        points = [(HALF, HALF), (Fraction(1, 3), Fraction(2, 3)), (Fraction(9, 10), Fraction(1, 10)), (HALF, 0)]
        answers = [ri_member(SQUARE, x) for x in points]
        assert answers == [True, True, True, False]
        info = binding_index_set.cache_info()
        assert info.misses == 1 and info.hits == len(points) - 1

    def test_decomposition_reuses_domain_and_fiber(self):
        binding_index_set.cache_clear()
        for y in (Fraction(1, 8), Fraction(1, 4), Fraction(3, 8)):
            assert ri_graph_member_decomposed(TRIANGLE_GRAPH, (HALF,), (y,))
        info = binding_index_set.cache_info()
        assert info.misses == 2 and info.hits == 4


class TestRandomSets:
    """Relative interior depends on the set, not on how its rows are written."""

    def test_invariant_under_redundancy_removal_and_scaling(self):
        rng = np.random.default_rng(42)
        for trial in range(30):
            dim = int(rng.integers(1, 4))
            P = random_nonempty_hrep(rng, dim, 5)
            k = int(rng.integers(2, 6))
            scaled = H(dim, eq=[(scale(k, a), k * b) for a, b in P.eq_rows()],
                       ineq=[(scale(k, c), k * d) for c, d in P.ineq_rows()])
            trimmed = remove_redundancy(P)
            for x in sample_points(h_to_v(P), seed=trial, random_count=8):
                expected = ri_member(P, x)
                assert ri_member(trimmed, x) == expected
                assert ri_member(scaled, x) == expected
