"""
Polyhedron Tests
================

Representation conversion, projection, set operations and inclusion, on the
small hand-checkable sets used throughout.
"""
from fractions import Fraction

import pytest

from polycalc.errors import DimensionMismatchError, EmptySetError
from polycalc.exact_linalg import Mat, identity, zero_mat
from polycalc.polyhedron import (
    HRep, VRep, affine_hull, canonicalize, embed, h_to_v, implicit_equality_rows,
    includes, intersect, is_empty, linear_image, linear_preimage, member,
    minkowski_sum, product, project, recession_cone, remove_redundancy, set_equal,
    v_to_h,
)

H = HRep.from_rows


def interval(lo, hi):
    return H(1, ineq=[((-1,), -lo), ((1,), hi)])


SQUARE = H(2, ineq=[((-1, 0), 0), ((1, 0), 1), ((0, -1), 0), ((0, 1), 1)])
SEGMENT = H(2, ineq=[((-1, 0), 0), ((1, 0), 1), ((0, 1), 0), ((0, -1), 0)])
EMPTY_1D = H(1, ineq=[((1,), 0), ((-1,), -1)])


class TestMembership:

    def test_square(self):
        assert member(SQUARE, (Fraction(1, 2), Fraction(1, 2)))
        assert not member(SQUARE, (2, 0))

    def test_equality(self):
        assert member(H(2, eq=[((1, -1), 0)]), (3, 3))

    def test_emptiness(self):
        assert is_empty(EMPTY_1D)
        assert not is_empty(HRep.whole_space(2))
        assert not is_empty(H(1, eq=[((1,), 5)]))

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            member(SQUARE, (1,))


class TestConversion:

    def test_square_vertices(self):
        V = h_to_v(SQUARE)
        assert set(V.points) == {(0, 0), (0, 1), (1, 0), (1, 1)}
        assert V.rays == () and V.lineality == ()

    def test_half_plane(self):
        V = h_to_v(H(2, ineq=[((-1, 0), 0)]))
        assert V.points == ((0, 0),)
        assert V.rays == ((1, 0),)
        assert len(V.lineality) == 1 and V.lineality[0][0] == 0

    def test_empty(self):
        assert h_to_v(EMPTY_1D).is_empty

    def test_segment_from_points(self):
        P = v_to_h(VRep(1, points=((Fraction(0),), (Fraction(1),))))
        assert set_equal(P, interval(0, 1))

    def test_line_from_lineality(self):
        P = v_to_h(VRep(2, points=((Fraction(0), Fraction(0)),), lineality=((Fraction(1), Fraction(0)),)))
        assert set_equal(P, H(2, eq=[((0, 1), 0)]))

    def test_empty_vrep(self):
        assert is_empty(v_to_h(VRep.empty(2)))

    def test_roundtrip_unbounded(self):
        # a wedge with apex (1, 1) and a lineality direction in 3d
        P = H(3, ineq=[((1, -1, 0), 0), ((-1, -1, 0), -2)])
        assert set_equal(P, v_to_h(h_to_v(P)))


class TestProjection:

    def test_triangle_shadow(self):
        P = H(2, ineq=[((1, 1), 1), ((1, -1), 1), ((-1, 0), 0)])
        assert set_equal(project(P, [0]), interval(0, 1))

    def test_whole_space(self):
        R = project(HRep.whole_space(2), [1])
        assert R.dim == 1 and R.n_eq == 0 and R.n_ineq == 0

    def test_substitutes_equality(self):
        P = H(2, eq=[((1, -1), 0)], ineq=[((-1, 0), 0), ((1, 0), 1)])
        assert set_equal(project(P, [0]), interval(0, 1))

    def test_empty_projects_to_empty(self):
        assert is_empty(project(product(EMPTY_1D, interval(0, 1)), [1]))

    def test_rejects_bad_coordinates(self):
        with pytest.raises(DimensionMismatchError):
            project(SQUARE, [2])


class TestSetOperations:

    def test_intersect(self):
        assert set_equal(intersect(H(1, ineq=[((-1,), 0)]), H(1, ineq=[((1,), 1)])), interval(0, 1))
        assert set_equal(intersect(SQUARE, HRep.whole_space(2)), SQUARE)
        assert is_empty(intersect(H(1, ineq=[((-1,), -1)]), H(1, ineq=[((1,), 0)])))

    def test_product(self):
        assert set_equal(product(interval(0, 1), interval(0, 1)), SQUARE)
        assert set_equal(product(SQUARE, HRep.whole_space(0)), SQUARE)
        assert is_empty(product(EMPTY_1D, SQUARE))

    def test_embed_permutes(self):
        # {x1 <= 1} placed on the second coordinate
        P = embed(H(1, ineq=[((1,), 1)]), [1], 2)
        assert member(P, (5, 1)) and not member(P, (0, 2))

    def test_minkowski_sum(self):
        assert set_equal(minkowski_sum(interval(0, 1), interval(0, 1)), interval(0, 2))
        origin = H(2, eq=[((1, 0), 0), ((0, 1), 0)])
        assert set_equal(minkowski_sum(SQUARE, origin), SQUARE)
        ray = H(2, eq=[((0, 1), 0)], ineq=[((-1, 0), 0)])
        assert set_equal(minkowski_sum(origin, ray), ray)

    def test_linear_image(self):
        assert set_equal(linear_image(Mat.from_rows([[1, 1]]), SQUARE), interval(0, 2))
        assert set_equal(linear_image(identity(2), SQUARE), SQUARE)
        assert set_equal(linear_image(zero_mat(2, 2), SQUARE), H(2, eq=[((1, 0), 0), ((0, 1), 0)]))

    def test_linear_image_of_unbounded_set(self):
        # the projection of a half-plane onto its normal is a half-line
        half = H(2, ineq=[((-1, 1), 0)])
        assert set_equal(linear_image(Mat.from_rows([[-1, 1]]), half), H(1, ineq=[((1,), 0)]))

    def test_linear_preimage(self):
        assert set_equal(linear_preimage(identity(2), SQUARE), SQUARE)
        Q = H(2, ineq=[((1, 0), 1), ((0, 1), 2)])
        assert set_equal(linear_preimage(Mat.from_rows([[1], [1]]), Q), H(1, ineq=[((1,), 1)]))
        assert set_equal(linear_preimage(identity(2), HRep.whole_space(2)), HRep.whole_space(2))

    def test_linear_preimage_composes_rows(self):
        T = Mat.from_rows([[1, 2], [0, 1]])
        Q = H(2, eq=[((0, 1), 1)], ineq=[((1, 0), 3)])
        P = linear_preimage(T, Q)
        assert P.eq_rows() == (((0, 1), 1),)
        assert P.ineq_rows() == (((1, 2), 3),)
        assert member(P, (1, 1)) and member(P, (-5, 1))
        assert not member(P, (2, 1)) and not member(P, (0, 0))


class TestStructure:

    def test_affine_hull_of_segment(self):
        assert set_equal(affine_hull(SEGMENT), H(2, eq=[((0, 1), 0)]))

    def test_affine_hull_full_dimensional(self):
        assert affine_hull(SQUARE).n_eq == 0

    def test_affine_hull_of_point(self):
        point = H(2, ineq=[((1, 0), 2), ((-1, 0), -2), ((0, 1), 3), ((0, -1), -3)])
        hull = affine_hull(point)
        assert hull.n_eq == 2
        assert member(hull, (2, 3)) and not member(hull, (2, 4))

    def test_affine_hull_of_empty(self):
        with pytest.raises(EmptySetError):
            affine_hull(EMPTY_1D)

    def test_implicit_rows(self):
        assert implicit_equality_rows(SEGMENT) == [2, 3]

    def test_recession_cone(self):
        assert set_equal(recession_cone(interval(0, 1)), H(1, eq=[((1,), 0)]))
        assert set_equal(recession_cone(H(1, ineq=[((-1,), 0)])), H(1, ineq=[((-1,), 0)]))
        cone = H(2, ineq=[((1, -1), 0), ((-1, -1), 0)])
        assert set_equal(recession_cone(cone), cone)

    def test_remove_redundancy(self):
        R = remove_redundancy(H(1, ineq=[((1,), 1), ((1,), 2)]))
        assert R.ineq_rows() == (((1,), 1),)
        R = remove_redundancy(SQUARE)
        assert R.n_ineq == 4 and set_equal(R, SQUARE)
        R = remove_redundancy(H(1, ineq=[((1,), 1), ((-1,), -1)]))
        assert R.n_ineq == 0 and R.eq_rows() == (((1,), 1),)

    def test_canonicalize(self):
        P = canonicalize(H(1, ineq=[((2,), 4), ((1,), 2), ((0,), 3)]))
        assert P.ineq_rows() == (((1,), 2),)
        assert canonicalize(H(1, ineq=[((0,), -1)])) == HRep.empty(1)


class TestInclusion:

    def test_set_equal(self):
        assert set_equal(H(1, ineq=[((1,), 1), ((1,), 2)]), H(1, ineq=[((1,), 1)]))
        assert not set_equal(interval(0, 1), interval(0, 2))
        assert set_equal(EMPTY_1D, HRep.empty(1))

    def test_includes(self):
        assert includes(interval(0, 1), interval(0, 2))
        assert not includes(interval(0, 2), interval(0, 1))
        assert includes(EMPTY_1D, interval(0, 1))
        assert not includes(H(1, ineq=[((-1,), 0)]), interval(0, 5))
