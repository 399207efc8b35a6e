"""
Brute-Force Oracles
===================

Independent, deliberately naive implementations used by the tests and the
`check` command. Every oracle here depends only on exact_linalg, lp and the
value types in representation; none of them calls polyhedron, multifunction,
convex_function or relint, so agreement is a genuine cross-check.

Multifunctions and functions are read through their attributes only
(nx, ny, graph / n, epi).
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, List, Optional, Sequence

import numpy as np

from config import Settings
from polycalc.errors import OracleSizeGuardError, PolyhedralError, check_dim
from polycalc.exact_linalg import (
    Mat, Vec, add, dot, is_zero, neg, nullspace_basis, primitive,
    scale, solve_affine, sub, vec,
)
from polycalc.lp import LPStatus, Sense, feasible, solve_lp
from polycalc.representation import ExtReal, HRep, VRep

if TYPE_CHECKING:
    from polycalc.convex_function import PCFunc
    from polycalc.multifunction import MultiFn

logger = logging.getLogger(__name__)


def _guard(P: HRep):
    rows = P.n_eq + P.n_ineq
    if P.dim > Settings.ORACLE_MAX_DIM or rows > Settings.ORACLE_MAX_ROWS:
        raise OracleSizeGuardError(
            f"oracle size guard: dim {P.dim} (max {Settings.ORACLE_MAX_DIM}), "
            f"rows {rows} (max {Settings.ORACLE_MAX_ROWS})")


def enumerate_basic_solutions(P: HRep) -> VRep:
    """
    Vertices and extreme rays by trying every subset of inequality rows as
    tight: a subset whose equation system has a unique solution gives a
    candidate vertex, one whose homogeneous system has a one-dimensional
    kernel gives candidate rays +-r. Candidates are feasibility-filtered.
    """
    _guard(P)
    n = P.dim
    if not feasible(P):
        return VRep.empty(n)

    lineality = nullspace_basis(Mat(P.eq_A.rows + P.ineq_C.rows, n))
    base_eq = list(P.eq_rows()) + [(l, Fraction(0)) for l in lineality]
    ineq = P.ineq_rows()

    points, rays = set(), set()
    for size in range(0, min(n, len(ineq)) + 1):
        for subset in itertools.combinations(range(len(ineq)), size):
            rows = base_eq + [ineq[i] for i in subset]
            A = Mat(tuple(a for a, _ in rows), n)
            solved = solve_affine(A, tuple(b for _, b in rows))
            if solved is not None and not solved[1]:
                x = solved[0]
                if all(dot(c, x) <= d for c, d in ineq):
                    points.add(x)
            kernel = nullspace_basis(A)
            if len(kernel) == 1:
                for r in (kernel[0], neg(kernel[0])):
                    if all(dot(c, r) <= 0 for c, _ in ineq):
                        rays.add(primitive(r))
    logger.debug("enumerate_basic_solutions: %d points, %d rays", len(points), len(rays))
    return VRep(n, tuple(sorted(points)), tuple(sorted(rays)), tuple(lineality))


def _in_cone(generators: Sequence[Vec], target: Vec) -> bool:
    """target in cone(generators), by LP over the multipliers."""
    r = len(generators)
    dim = len(target)
    eq = [(tuple(g[k] for g in generators), target[k]) for k in range(dim)]
    ineq = [(tuple(Fraction(-1 if j == i else 0) for j in range(r)), 0) for i in range(r)]
    return feasible(HRep.from_rows(r, eq, ineq))


def iri_member_oracle(P: HRep, x: Sequence) -> bool:
    """
    x in iri P  iff  cone(P - x) is a linear subspace, i.e. the negative of
    every generator of cone(P - x) lies in the cone again.
    """
    x = vec(x)
    check_dim("point", len(x), P.dim)
    if not P.contains(x):
        raise PolyhedralError("intrinsic relative interior oracle needs a point of the set")
    V = enumerate_basic_solutions(P)
    gens = [sub(u, x) for u in V.points] + list(V.rays)
    gens += list(V.lineality) + [neg(l) for l in V.lineality]
    gens = [g for g in gens if not is_zero(g)]
    if not gens:
        return True
    return all(_in_cone(gens, neg(g)) for g in gens)


def optval_oracle(phi: "PCFunc", F: "MultiFn", x: Sequence) -> ExtReal:
    """min t over (y, t) with (x, y, t) in epi phi and (x, y) in gph F."""
    x = vec(x)
    nx, ny = F.nx, F.ny
    check_dim("objective arguments", phi.n, nx + ny)
    check_dim("point", len(x), nx)
    eq, ineq = [], []
    for a, b in phi.epi.eq_rows():
        eq.append((a[nx:], b - dot(a[:nx], x)))
    for a, b in phi.epi.ineq_rows():
        ineq.append((a[nx:], b - dot(a[:nx], x)))
    for a, b in F.graph.eq_rows():
        eq.append((a[nx:] + (Fraction(0),), b - dot(a[:nx], x)))
    for a, b in F.graph.ineq_rows():
        ineq.append((a[nx:] + (Fraction(0),), b - dot(a[:nx], x)))
    objective = tuple(Fraction(0) for _ in range(ny)) + (Fraction(1),)
    res = solve_lp(objective, HRep.from_rows(ny + 1, eq, ineq), Sense.MIN)
    if res.status == LPStatus.INFEASIBLE:
        return ExtReal.plus_inf()
    if res.status == LPStatus.UNBOUNDED:
        return ExtReal.minus_inf()
    return ExtReal.finite(res.value)


@dataclass(frozen=True)
class _Graph:
    nx: int
    ny: int
    graph: HRep


def pointwise_relation_oracle(F: "MultiFn", x: Sequence, z: Sequence, extra: Optional[HRep] = None) -> bool:
    """
    Is {y : (x, y) in gph F, (y, z) in extra} nonempty?

    `extra` is an HRep over (y, z)-space supplied by the caller (the graph of
    G for compositions, y1 + y2 = z for sums); without it the condition is
    y = z.
    """
    x, z = vec(x), vec(z)
    nx, ny = F.nx, F.ny
    check_dim("x", len(x), nx)
    if extra is None:
        check_dim("z", len(z), ny)
        extra = HRep.from_rows(
            2 * ny,
            eq=[(tuple(Fraction(1 if j == i else -1 if j == ny + i else 0) for j in range(2 * ny)), 0)
                for i in range(ny)],
        )
    check_dim("relation", extra.dim, ny + len(z))

    eq = [(a[nx:], b - dot(a[:nx], x)) for a, b in F.graph.eq_rows()]
    ineq = [(a[nx:], b - dot(a[:nx], x)) for a, b in F.graph.ineq_rows()]
    eq += [(a[:ny], b - dot(a[ny:], z)) for a, b in extra.eq_rows()]
    ineq += [(a[:ny], b - dot(a[ny:], z)) for a, b in extra.ineq_rows()]
    return feasible(HRep.from_rows(ny, eq, ineq))


def pointwise_sum_oracle(F1: "MultiFn", F2: "MultiFn", x: Sequence, z: Sequence) -> bool:
    """z in F1(x) + F2(x): joint LP over (y1, y2) with y1 + y2 = z."""
    nx, ny = F1.nx, F1.ny
    check_dim("second summand", F2.nx + F2.ny, nx + ny)
    total = nx + 2 * ny

    def place(rows, offset):
        out = []
        for a, b in rows:
            row = [Fraction(0)] * total
            row[:nx] = a[:nx]
            row[offset:offset + ny] = a[nx:]
            out.append((tuple(row), b))
        return out

    doubled = HRep.from_rows(
        total,
        place(F1.graph.eq_rows(), nx) + place(F2.graph.eq_rows(), nx + ny),
        place(F1.graph.ineq_rows(), nx) + place(F2.graph.ineq_rows(), nx + ny),
    )
    link = HRep.from_rows(
        3 * ny,
        eq=[(tuple(Fraction(1 if j in (i, ny + i) else -1 if j == 2 * ny + i else 0) for j in range(3 * ny)), 0)
            for i in range(ny)],
    )
    return pointwise_relation_oracle(_Graph(nx, 2 * ny, doubled), x, z, link)


def lifted_projection_oracle(P: HRep, keep: Sequence[int], x: Sequence) -> bool:
    """x in pi_keep(P): is {y in P : y_keep = x} nonempty?"""
    x = vec(x)
    check_dim("projected point", len(x), len(keep))
    eq = list(P.eq_rows())
    for k, j in enumerate(keep):
        eq.append((tuple(Fraction(1 if i == j else 0) for i in range(P.dim)), x[k]))
    return feasible(HRep.from_rows(P.dim, eq, P.ineq_rows()))


def linear_image_oracle(T: Mat, P: HRep, y: Sequence) -> bool:
    """y in T(P): is {x in P : T x = y} nonempty?"""
    y = vec(y)
    check_dim("image point", len(y), T.nrows)
    eq = list(P.eq_rows()) + list(zip(T.rows, y))
    return feasible(HRep.from_rows(P.dim, eq, P.ineq_rows()))


def minkowski_sum_oracle(P: HRep, Q: HRep, z: Sequence) -> bool:
    """z in P + Q: joint LP over (p, q) with p + q = z."""
    z = vec(z)
    n = P.dim
    check_dim("summand", Q.dim, n)
    check_dim("point", len(z), n)
    pad = tuple(Fraction(0) for _ in range(n))
    eq = [(a + pad, b) for a, b in P.eq_rows()] + [(pad + a, b) for a, b in Q.eq_rows()]
    ineq = [(c + pad, d) for c, d in P.ineq_rows()] + [(pad + c, d) for c, d in Q.ineq_rows()]
    for i in range(n):
        row = [Fraction(0)] * (2 * n)
        row[i] = row[n + i] = Fraction(1)
        eq.append((tuple(row), z[i]))
    return feasible(HRep.from_rows(2 * n, eq, ineq))


def image_oracle(F: "MultiFn", C: HRep, y: Sequence) -> bool:
    """y in F(C): is {x in C : (x, y) in gph F} nonempty?"""
    y = vec(y)
    nx = F.nx
    check_dim("argument set", C.dim, nx)
    check_dim("image point", len(y), F.ny)
    eq = list(C.eq_rows()) + [(a[:nx], b - dot(a[nx:], y)) for a, b in F.graph.eq_rows()]
    ineq = list(C.ineq_rows()) + [(a[:nx], b - dot(a[nx:], y)) for a, b in F.graph.ineq_rows()]
    return feasible(HRep.from_rows(nx, eq, ineq))


def sample_points(V: VRep, seed: int, random_count: int = 16, max_den: int = 8, box: int = 4) -> List[Vec]:
    """
    Deterministic sampling grid: every generator point, all pairwise
    midpoints, points displaced by 1 and 2 along each ray (and +-1 along each
    lineality vector), plus `random_count` seeded rationals with denominators
    at most `max_den` in [-box, box]^dim.
    """
    grid: List[Vec] = list(V.points)
    half = Fraction(1, 2)
    for p, q in itertools.combinations(V.points, 2):
        grid.append(scale(half, add(p, q)))
    for u in V.points:
        for r in V.rays:
            grid.append(add(u, r))
            grid.append(add(u, scale(2, r)))
        for l in V.lineality:
            grid.append(add(u, l))
            grid.append(sub(u, l))

    rng = np.random.default_rng(seed)
    for _ in range(random_count):
        dens = rng.integers(1, max_den + 1, size=V.dim)
        nums = [int(rng.integers(-box * int(d), box * int(d) + 1)) for d in dens]
        grid.append(tuple(Fraction(num, int(d)) for num, d in zip(nums, dens)))

    seen, out = set(), []
    for g in grid:
        if g not in seen:
            seen.add(g)
            out.append(g)
    return out
