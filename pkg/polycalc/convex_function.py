"""
Polyhedral Convex Functions
===========================

A polyhedral convex function f: Q^n -> [-inf, +inf] is stored as the HRep of
its epigraph over (x, t), t being the last coordinate. The epigraph must be
closed upward in t, i.e. e_t lies in its recession cone.

The optimal value function of a parametric program

    mu(x) = inf { phi(x, y) : y in F(x) },  inf(empty) = +inf

is materialized as epi mu = pi_(x,t)(epi phi /\\ (gph F x Q)), which is exact
for a proper polyhedral phi; the solution map M(x) collects the minimizers.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple

from polycalc.errors import (
    DimensionMismatchError, ImproperObjectiveError, NotAnEpigraphError, check_dim,
)
from polycalc.exact_linalg import dot, unit, vec, zeros
from polycalc.lp import LPStatus, Sense, solve_lp
from polycalc.multifunction import MultiFn
from polycalc.polyhedron import HRep, embed, intersect, is_empty, product, project
from polycalc.representation import ExtReal

logger = logging.getLogger(__name__)

__all__ = [
    "ExtReal", "PCFunc", "evaluate", "is_proper", "domain",
    "optimal_value_fn", "solution_map",
]


@dataclass(frozen=True)
class PCFunc:
    n: int
    epi: HRep

    def __post_init__(self):
        check_dim("epigraph", self.epi.dim, self.n + 1)
        t = self.n
        upward = (all(a[t] == 0 for a in self.epi.eq_A.rows)
                  and all(c[t] <= 0 for c in self.epi.ineq_C.rows))
        if not upward and not is_empty(self.epi):
            raise NotAnEpigraphError("epigraph is not closed upward in its last coordinate")

    @classmethod
    def from_pieces(cls, pieces: Iterable[Tuple[Sequence, object]], dom: Optional[HRep] = None) -> "PCFunc":
        """f(x) = max_j (<a_j, x> + b_j) on `dom` (whole space when omitted), +inf outside."""
        pieces = [(vec(a), Fraction(b)) for a, b in pieces]
        if not pieces:
            raise ValueError("from_pieces needs at least one affine piece")
        n = len(pieces[0][0])
        for a, _ in pieces:
            check_dim("affine piece", len(a), n)
        epi = HRep.from_rows(n + 1, ineq=[(a + (Fraction(-1),), -b) for a, b in pieces])
        if dom is not None:
            check_dim("function domain", dom.dim, n)
            epi = intersect(epi, embed(dom, range(n), n + 1))
        return cls(n, epi)

    @classmethod
    def indicator(cls, C: HRep) -> "PCFunc":
        """0 on C, +inf outside."""
        return cls(C.dim, product(C, HRep.from_rows(1, ineq=[((-1,), 0)])))


def _fiber(f: PCFunc, x) -> HRep:
    """{t : (x, t) in epi f}."""
    def fix(rows):
        return [(a[f.n:], b - dot(a[:f.n], x)) for a, b in rows]
    return HRep.from_rows(1, fix(f.epi.eq_rows()), fix(f.epi.ineq_rows()))


def evaluate(f: PCFunc, x: Sequence) -> ExtReal:
    x = vec(x)
    check_dim("evaluation point", len(x), f.n)
    res = solve_lp((Fraction(1),), _fiber(f, x), Sense.MIN)
    if res.status == LPStatus.INFEASIBLE:
        return ExtReal.plus_inf()
    if res.status == LPStatus.UNBOUNDED:
        return ExtReal.minus_inf()
    return ExtReal.finite(res.value)


def is_proper(f: PCFunc) -> bool:
    """Nonempty epigraph and -e_t outside its recession cone."""
    if is_empty(f.epi):
        return False
    t = f.n
    downward = (all(a[t] == 0 for a in f.epi.eq_A.rows)
                and all(c[t] >= 0 for c in f.epi.ineq_C.rows))
    return not downward


def domain(f: PCFunc) -> HRep:
    """dom f = pi_X(epi f)."""
    return project(f.epi, range(f.n))


def _check_objective(phi: PCFunc, F: MultiFn):
    if phi.n != F.nx + F.ny:
        raise DimensionMismatchError(
            f"objective has {phi.n} arguments, multifunction needs {F.nx + F.ny}")


def optimal_value_fn(phi: PCFunc, F: MultiFn) -> PCFunc:
    """
    mu(x) = inf{phi(x, y) : y in F(x)} as a PCFunc over Q^nx.

    epi phi and the lifted graph gph F x Q live in (x, y, t)-space; epi mu is
    the projection of their intersection onto (x, t). Only proper objectives
    are accepted: otherwise the projection is merely squeezed between the
    strict epigraph and the epigraph of mu.
    """
    _check_objective(phi, F)
    if not is_proper(phi):
        raise ImproperObjectiveError(
            "optimal value construction requires a proper objective "
            "(the projected epigraph is exact only for proper phi)")
    total = F.nx + F.ny + 1
    lifted_graph = embed(F.graph, range(F.nx + F.ny), total)
    keep = list(range(F.nx)) + [total - 1]
    epi_mu = project(intersect(phi.epi, lifted_graph), keep)
    logger.debug("optimal_value_fn: epi mu has %d eq, %d ineq rows", epi_mu.n_eq, epi_mu.n_ineq)
    return PCFunc(F.nx, epi_mu)


def _parametric_value(phi: PCFunc, F: MultiFn, x) -> ExtReal:
    """mu(x) by one LP over (y, t)."""
    nx, ny = F.nx, F.ny

    def fix(rows, width):
        return [(a[nx:] + zeros(ny + 1 - width), b - dot(a[:nx], x)) for a, b in rows]

    lifted = HRep.from_rows(
        ny + 1,
        fix(phi.epi.eq_rows(), ny + 1) + fix(F.graph.eq_rows(), ny),
        fix(phi.epi.ineq_rows(), ny + 1) + fix(F.graph.ineq_rows(), ny),
    )
    res = solve_lp(unit(ny + 1, ny), lifted, Sense.MIN)
    if res.status == LPStatus.INFEASIBLE:
        return ExtReal.plus_inf()
    if res.status == LPStatus.UNBOUNDED:
        return ExtReal.minus_inf()
    return ExtReal.finite(res.value)


def solution_map(phi: PCFunc, F: MultiFn, x: Sequence) -> HRep:
    """
    M(x) = {y in F(x) : phi(x, y) <= mu(x)}; empty when mu(x) is +-inf.
    """
    _check_objective(phi, F)
    x = vec(x)
    check_dim("solution map point", len(x), F.nx)
    mu = _parametric_value(phi, F, x)
    if not mu.is_finite:
        return HRep.empty(F.ny)

    nx, ny = F.nx, F.ny

    def fix_graph(rows):
        return [(a[nx:], b - dot(a[:nx], x)) for a, b in rows]

    def fix_epi(rows):
        # (x, y, t) with x given and t = mu(x)
        return [(a[nx:nx + ny], b - dot(a[:nx], x) - a[nx + ny] * mu.value) for a, b in rows]

    return HRep.from_rows(
        ny,
        fix_graph(F.graph.eq_rows()) + fix_epi(phi.epi.eq_rows()),
        fix_graph(F.graph.ineq_rows()) + fix_epi(phi.epi.ineq_rows()),
    )
