"""
Relative Interiors
==================

For a polyhedron P = {x : A x = b, <c_i, x> <= d_i} the relative interior is
given by an index-set formula:

    I     = {i : <c_i, x^_i> < d_i for some x^_i in P}
    ri P  = {x : A x = b, <c_i, x> = d_i (i not in I), <c_i, x> < d_i (i in I)}

Intrinsic and quasi-relative interiors coincide with ri for polyhedra; the
oracle tests the intrinsic form independently.

The graph of a multifunction decomposes as

    ri gph F = {(x, y) : x in ri(dom F), y in ri(F(x))}.
"""

import functools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Sequence, Tuple

from polycalc.errors import EmptySetError, check_dim
from polycalc.exact_linalg import Mat, Vec, add, dot, scale, vec, zeros
from polycalc.lp import LPStatus, feasible_point
from polycalc.multifunction import MultiFn, domain, value
from polycalc.polyhedron import HRep, affine_hull, is_empty, member, slack_lp

logger = logging.getLogger(__name__)

IndexSet = Tuple[int, ...]


@dataclass(frozen=True)
class RelOpenHRep:
    """{x : eq rows hold, strict rows hold strictly}."""
    dim: int
    eq_A: Mat
    eq_b: Vec
    strict_C: Mat
    strict_d: Vec

    def __post_init__(self):
        check_dim("relatively open equality block", self.eq_A.ncols, self.dim)
        check_dim("relatively open strict block", self.strict_C.ncols, self.dim)
        check_dim("equality rhs", len(self.eq_b), self.eq_A.nrows)
        check_dim("strict rhs", len(self.strict_d), self.strict_C.nrows)

    def contains(self, x: Sequence) -> bool:
        x = vec(x)
        check_dim("point", len(x), self.dim)
        return (all(dot(a, x) == b for a, b in zip(self.eq_A.rows, self.eq_b))
                and all(dot(c, x) < d for c, d in zip(self.strict_C.rows, self.strict_d)))


_is_empty = functools.lru_cache(maxsize=256)(is_empty)
_domain = functools.lru_cache(maxsize=64)(domain)


def _require_nonempty(P: HRep, what: str):
    if _is_empty(P):
        raise EmptySetError(f"{what} undefined on empty set")


def strict_witnesses(P: HRep) -> Dict[int, Vec]:
    """
    For every row i that is strict somewhere on P, a point x^_i of P with
    <c_i, x^_i> < d_i. One LP per row, maximizing the slack.
    """
    _require_nonempty(P, "index set")
    base = None
    witnesses: Dict[int, Vec] = {}
    for i, (c, d) in enumerate(P.ineq_rows()):
        res = slack_lp(P, i)
        if res.status == LPStatus.OPTIMAL:
            if res.value > 0:
                witnesses[i] = res.point
        elif res.status == LPStatus.UNBOUNDED:
            if base is None:
                base = feasible_point(P)
            # slack(base + ray) = slack(base) - <c, ray> > 0
            witnesses[i] = add(base, res.ray)
    return witnesses


@functools.lru_cache(maxsize=256)
def binding_index_set(P: HRep) -> IndexSet:
    """Rows strict somewhere on P. Cached per HRep value."""
    return tuple(sorted(strict_witnesses(P)))


def relative_interior(P: HRep) -> RelOpenHRep:
    _require_nonempty(P, "relative interior")
    hull = affine_hull(P)
    index = binding_index_set(P)
    rows = P.ineq_rows()
    return RelOpenHRep(
        P.dim, hull.eq_A, hull.eq_b,
        Mat(tuple(rows[i][0] for i in index), P.dim),
        tuple(rows[i][1] for i in index),
    )


def relative_interior_point(P: HRep) -> Vec:
    """
    x^ = (1/p) sum x^_i over the strict witnesses; strict for every i in I by
    convexity. Any point of P when I is empty (then ri P = P).
    """
    witnesses = strict_witnesses(P)
    if not witnesses:
        return feasible_point(P)
    total = zeros(P.dim)
    for w in witnesses.values():
        total = add(total, w)
    return scale(Fraction(1, len(witnesses)), total)


def ri_member(P: HRep, x: Sequence) -> bool:
    x = vec(x)
    check_dim("point", len(x), P.dim)
    _require_nonempty(P, "relative interior")
    if not member(P, x):
        return False
    rows = P.ineq_rows()
    return all(dot(rows[i][0], x) < rows[i][1] for i in binding_index_set(P))


def ri_domain(F: MultiFn) -> RelOpenHRep:
    return relative_interior(_domain(F))


def ri_graph_member_decomposed(F: MultiFn, x: Sequence, y: Sequence) -> bool:
    """x in ri(dom F) and y in ri(F(x)), without looking at ri(gph F)."""
    x, y = vec(x), vec(y)
    check_dim("x", len(x), F.nx)
    check_dim("y", len(y), F.ny)
    _require_nonempty(F.graph, "relative interior of graph")
    if not ri_member(_domain(F), x):
        return False
    fiber = value(F, x)
    if is_empty(fiber):
        return False
    return ri_member(fiber, y)
