"""
Exact Linear Programming
========================

Two-phase primal simplex over Fractions with Bland's anti-cycling rule.

solve_lp(c, P, sense) works on an HRep directly:
1. Equality rows are eliminated first: x = x0 + N z with N a kernel basis
   (rref-based substitution, so equalities never enter the tableau).
2. The free variables z are split as z+ - z-, inequality rows get slacks.
3. Phase 1 drives out artificials; phase 2 optimizes with Bland's rule.

All values are exact; an Optimal point satisfies every row of P exactly.
"""

import enum
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from polycalc.errors import check_dim
from polycalc.exact_linalg import Vec, add, dot, scale, solve_affine, vec, zeros
from polycalc.representation import HRep

logger = logging.getLogger(__name__)


class LPStatus(str, enum.Enum):
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"
    OPTIMAL = "optimal"


class Sense(str, enum.Enum):
    MIN = "min"
    MAX = "max"


@dataclass(frozen=True)
class LPResult:
    """Outcome of a linear program; value and point are present iff Optimal."""
    status: LPStatus
    value: Optional[Fraction] = None
    point: Optional[Vec] = None
    # Improving direction of the feasible set, present iff Unbounded
    ray: Optional[Vec] = None

    @property
    def is_optimal(self) -> bool:
        return self.status == LPStatus.OPTIMAL


def _pivot(T: List[List[Fraction]], basis: List[int], r: int, j: int):
    piv = T[r][j]
    T[r] = [x / piv for x in T[r]]
    for i in range(len(T)):
        if i != r and T[i][j] != 0:
            f = T[i][j]
            T[i] = [x - f * y for x, y in zip(T[i], T[r])]
    basis[r] = j


def _bland(T: List[List[Fraction]], basis: List[int], cost: Sequence[Fraction], ncols: int) -> Tuple[str, Optional[int], int]:
    """
    Run simplex iterations on tableau T (last column = rhs) until optimal or
    unbounded. Returns (outcome, unbounded column, pivot count).
    """
    pivots = 0
    m = len(T)
    while True:
        entering = None
        for j in range(ncols):
            reduced = cost[j] - sum((cost[basis[i]] * T[i][j] for i in range(m)), Fraction(0))
            if reduced < 0:
                entering = j
                break
        if entering is None:
            return "optimal", None, pivots

        leave = None
        best = None
        for i in range(m):
            if T[i][entering] > 0:
                ratio = T[i][-1] / T[i][entering]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            return "unbounded", entering, pivots
        _pivot(T, basis, leave, entering)
        pivots += 1


def _standard_form(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction],
                   cost: Sequence[Fraction]) -> Tuple[LPStatus, Optional[Vec], Optional[Vec]]:
    """
    min cost.w  s.t.  rows w = rhs, w >= 0.

    Returns (status, optimal w, unbounded direction in w).
    """
    n = len(cost)
    T: List[List[Fraction]] = []
    for r, b in zip(rows, rhs):
        if b < 0:
            T.append([-x for x in r] + [-b])
        else:
            T.append(list(r) + [Fraction(b)])
    m = len(T)

    basis: List[Optional[int]] = [None] * m
    used = set()
    for i in range(m):
        for j in range(n):
            if j in used or T[i][j] != 1:
                continue
            if all(T[k][j] == 0 for k in range(m) if k != i):
                basis[i] = j
                used.add(j)
                break

    missing = [i for i in range(m) if basis[i] is None]
    n_art = len(missing)
    for i in range(m):
        T[i] = T[i][:n] + [Fraction(0)] * n_art + [T[i][n]]
    for a, i in enumerate(missing):
        T[i][n + a] = Fraction(1)
        basis[i] = n + a

    if n_art:
        phase1_cost = [Fraction(0)] * n + [Fraction(1)] * n_art
        _, _, count = _bland(T, basis, phase1_cost, n + n_art)
        infeasibility = sum((T[i][-1] for i in range(m) if basis[i] >= n), Fraction(0))
        logger.debug("phase 1: %d pivots, residual %s", count, infeasibility)
        if infeasibility > 0:
            return LPStatus.INFEASIBLE, None, None

        keep = []
        for i in range(m):
            if basis[i] >= n:
                j = next((j for j in range(n) if T[i][j] != 0), None)
                if j is None:
                    # Redundant equation
                    continue
                _pivot(T, basis, i, j)
            keep.append(i)
        T = [T[i][:n] + [T[i][-1]] for i in keep]
        basis = [basis[i] for i in keep]
        m = len(T)

    outcome, column, count = _bland(T, basis, cost, n)
    logger.debug("phase 2: %d pivots, %s", count, outcome)
    if outcome == "unbounded":
        direction = [Fraction(0)] * n
        direction[column] = Fraction(1)
        for i in range(m):
            direction[basis[i]] = -T[i][column]
        return LPStatus.UNBOUNDED, None, tuple(direction)

    w = [Fraction(0)] * n
    for i in range(m):
        w[basis[i]] = T[i][-1]
    return LPStatus.OPTIMAL, tuple(w), None


def solve_lp(c: Sequence, P: HRep, sense: Sense = Sense.MIN) -> LPResult:
    """
    Optimize <c, x> over P.

    Unbounded means the objective is unbounded in the requested sense; the
    result then carries a feasible improving direction in `ray`.
    """
    c = vec(c)
    check_dim("objective", len(c), P.dim)
    sense = Sense(sense)

    affine = solve_affine(P.eq_A, P.eq_b)
    if affine is None:
        return LPResult(LPStatus.INFEASIBLE)
    x0, kernel = affine
    k = len(kernel)

    sign = Fraction(1) if sense == Sense.MIN else Fraction(-1)
    cz = [sign * dot(c, nv) for nv in kernel]

    m = P.n_ineq
    rows = []
    rhs = []
    for i, (ci, di) in enumerate(P.ineq_rows()):
        g = [dot(ci, nv) for nv in kernel]
        slack = [Fraction(0)] * m
        slack[i] = Fraction(1)
        rows.append(g + [-x for x in g] + slack)
        rhs.append(di - dot(ci, x0))
    cost = cz + [-x for x in cz] + [Fraction(0)] * m

    status, w, direction = _standard_form(rows, rhs, cost)
    if status == LPStatus.INFEASIBLE:
        return LPResult(status)

    def lift(z_plus_minus, base):
        x = base
        for j, nv in enumerate(kernel):
            coef = z_plus_minus[j] - z_plus_minus[k + j]
            if coef != 0:
                x = add(x, scale(coef, nv))
        return x

    if status == LPStatus.UNBOUNDED:
        return LPResult(status, ray=lift(direction, zeros(P.dim)))

    point = lift(w, x0)
    return LPResult(status, value=dot(c, point), point=point)


def feasible(P: HRep) -> bool:
    """Phase-1 certificate: True iff P is nonempty."""
    return solve_lp(zeros(P.dim), P).status != LPStatus.INFEASIBLE


def feasible_point(P: HRep) -> Optional[Vec]:
    """Some point of P, or None when P is empty."""
    result = solve_lp(zeros(P.dim), P)
    return result.point
