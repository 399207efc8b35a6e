"""
polycalc Calculus Scenarios
===========================

Cross-module scenarios: each one computes the same object along two
different routes through the calculus and checks that they agree.
"""

from fractions import Fraction

from polycalc.convex_function import ExtReal, PCFunc, evaluate, optimal_value_fn
from polycalc.exact_linalg import Mat
from polycalc.multifunction import (
    MultiFn, compose, domain, image, inverse, preimage, range_, sum_,
)
from polycalc.polyhedron import (
    HRep, h_to_v, linear_image, linear_preimage, minkowski_sum, product, project,
    recession_cone, set_equal, v_to_h,
)
from polycalc.relint import relative_interior, ri_domain

H = HRep.from_rows


def interval(lo, hi):
    return H(1, ineq=[((-1,), -lo), ((1,), hi)])


SQUARE = H(2, ineq=[((-1, 0), 0), ((1, 0), 1), ((0, -1), 0), ((0, 1), 1)])
DOUBLE = MultiFn.from_blocks(1, 1, eq=[((2,), (-1,), 0)])                          # y = 2x
DIAGONAL_01 = MultiFn.from_blocks(1, 1, eq=[((1,), (-1,), 0)], ineq=[((-1,), (0,), 0), ((1,), (0,), 1)])
ABOVE = MultiFn.from_blocks(1, 1, ineq=[((1,), (-1,), 0)])                          # y >= x
ABOVE_NEG = MultiFn.from_blocks(1, 1, ineq=[((-1,), (-1,), 0)])                     # y >= -x
PHI_Y = PCFunc.from_pieces([((0, 1), 0)])


# ==============================================================================
# SCENARIO 1-4: Sets
# ==============================================================================

class TestSetScenarios:
    """Set constructions that can be reached two ways."""

    def test_1_linear_image_by_generators_and_by_graph(self):
        """Scenario 1: T(D) from images of generators equals the image of gph T."""
        T = Mat.from_rows([[1, 1]])
        assert set_equal(linear_image(T, SQUARE), interval(0, 2))
        assert set_equal(image(MultiFn.linear_map(T), SQUARE), interval(0, 2))

    def test_2_linear_preimage_by_substitution_and_by_graph(self):
        """Scenario 2: {x : Tx in Q} by substituting rows equals F^-1(Q) for gph T."""
        T = Mat.from_rows([[1], [1]])
        Q = H(2, ineq=[((1, 0), 1), ((0, 1), 2)])
        assert set_equal(linear_preimage(T, Q), H(1, ineq=[((1,), 1)]))
        assert set_equal(preimage(MultiFn.linear_map(T), Q), H(1, ineq=[((1,), 1)]))

    def test_3_minkowski_sum_is_image_of_product(self):
        """Scenario 3: P + Q equals the image of P x Q under (p, q) -> p + q."""
        segment = H(2, eq=[((0, 1), 0)], ineq=[((-1, 0), 0), ((1, 0), 2)])
        add = Mat.from_rows([[1, 0, 1, 0], [0, 1, 0, 1]])
        assert set_equal(minkowski_sum(SQUARE, segment), linear_image(add, product(SQUARE, segment)))

    def test_4_product_projects_back(self):
        """Scenario 4: projecting P x Q onto P's coordinates gives P back."""
        P, Q = interval(0, 1), interval(-2, 5)
        assert set_equal(project(product(P, Q), [0]), P)
        assert set_equal(project(product(P, Q), [1]), Q)
        assert set_equal(v_to_h(h_to_v(product(P, Q))), product(P, Q))


# ==============================================================================
# SCENARIO 5-8: Multifunctions
# ==============================================================================

class TestMultifunctionScenarios:
    """Inverse, composition and sum against each other."""

    def test_5_inverse_swaps_domain_and_range(self):
        """Scenario 5: dom F^-1 = rge F and rge F^-1 = dom F."""
        for F in (DOUBLE, DIAGONAL_01, ABOVE):
            assert set_equal(domain(inverse(F)), range_(F))
            assert set_equal(range_(inverse(F)), domain(F))

    def test_6_inverse_after_injective_map_is_identity(self):
        """Scenario 6: F^-1 o F is the identity when F is y = 2x."""
        assert set_equal(compose(inverse(DOUBLE), DOUBLE).graph, MultiFn.identity(1).graph)

    def test_7_preimage_is_domain_of_composition(self):
        """Scenario 7: F^-1(D) is the domain of (indicator of D) o F."""
        D = interval(0, 2)
        restrict = MultiFn(1, 1, product(D, HRep.whole_space(1)))
        assert set_equal(preimage(DOUBLE, D), domain(compose(restrict, DOUBLE)))
        assert set_equal(preimage(DOUBLE, D), interval(0, 1))

    def test_8_sum_of_halves_of_absolute_value(self):
        """Scenario 8: {y >= x} + {y >= -x} gives [0, inf) at every x."""
        S = sum_(ABOVE, ABOVE_NEG)
        assert set_equal(range_(S), H(1, ineq=[((-1,), 0)]))
        assert set_equal(domain(S), HRep.whole_space(1))


# ==============================================================================
# SCENARIO 9-11: Parametric programs and relative interiors
# ==============================================================================

class TestParametricScenarios:

    def test_9_optimal_value_of_a_sum(self):
        """Scenario 9: inf over (F1 + F2)(x) of y is 0 everywhere."""
        mu = optimal_value_fn(PHI_Y, sum_(ABOVE, ABOVE_NEG))
        for k in range(-4, 5):
            assert evaluate(mu, (Fraction(k, 3),)) == ExtReal.finite(0)

    def test_10_value_function_epigraph_is_a_cone(self):
        """Scenario 10: mu = |x| has a conic epigraph, so it is its own recession cone."""
        mu = optimal_value_fn(PHI_Y, MultiFn(1, 1, H(2, ineq=[((1, -1), 0), ((-1, -1), 0)])))
        assert set_equal(recession_cone(mu.epi), mu.epi)

    def test_11_ri_domain_is_relative_interior_of_domain(self):
        """Scenario 11: ri(dom F) through the multifunction and through the set agree."""
        ri = ri_domain(DIAGONAL_01)
        direct = relative_interior(interval(0, 1))
        for x in (Fraction(-1), Fraction(0), Fraction(1, 2), Fraction(1), Fraction(3, 2)):
            assert ri.contains((x,)) == direct.contains((x,))
