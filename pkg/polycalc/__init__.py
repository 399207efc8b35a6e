"""
polycalc - Exact Polyhedral Calculus
====================================

Polyhedral convex sets, functions and multifunctions over the rationals:

- representation conversion, projection, images, sums, inclusion tests
- multifunction domain, range, inverse, values, composition and sums
- optimal value functions and solution maps of parametric programs
- relative interiors through the binding index set

Everything is computed with fractions.Fraction; brute-force oracles and seeded
property suites cross-check every construction.
"""

from polycalc.convex_function import PCFunc, evaluate, is_proper, optimal_value_fn, solution_map
from polycalc.errors import PolyhedralError
from polycalc.multifunction import MultiFn, compose, sum_
from polycalc.polyhedron import h_to_v, project, set_equal, v_to_h
from polycalc.relint import relative_interior, ri_member
from polycalc.representation import ExtReal, HRep, VRep

__all__ = [
    'HRep',
    'VRep',
    'ExtReal',
    'MultiFn',
    'PCFunc',
    'PolyhedralError',
    'h_to_v',
    'v_to_h',
    'project',
    'set_equal',
    'compose',
    'sum_',
    'evaluate',
    'is_proper',
    'optimal_value_fn',
    'solution_map',
    'relative_interior',
    'ri_member',
]
