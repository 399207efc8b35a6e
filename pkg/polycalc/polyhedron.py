"""
Polyhedron
==========

Structural algorithms on polyhedral convex sets in Q^n.

- h_to_v / v_to_h: double description method on the homogenized cone, after
  splitting off the lineality space (generator form points + rays + X0)
- project: Fourier-Motzkin elimination, substituting through equality rows
  first and pruning redundant rows by LP after every step
- intersect / product / embed / minkowski_sum / linear_image / linear_preimage
- affine_hull / recession_cone / remove_redundancy / set_equal

In finite dimension every "generalized polyhedral convex" set is polyhedral,
so the closedness hypotheses on linear mappings never appear in code.
"""

import logging
from fractions import Fraction
from typing import FrozenSet, List, Sequence, Tuple

from config import Settings
from polycalc.errors import DimensionMismatchError, EmptySetError, check_dim
from polycalc.exact_linalg import (
    Mat, Vec, add, canonical_row, dot, is_zero, mat_mul, mat_vec, neg, nullspace_basis,
    primitive, rank, rref, row_basis, scale, unit, vec, zeros,
)
from polycalc.lp import LPResult, LPStatus, Sense, feasible, feasible_point, solve_lp
from polycalc.representation import CoordSet, HRep, Row, VRep, coord_set

logger = logging.getLogger(__name__)

__all__ = [
    "HRep", "VRep", "CoordSet", "coord_set",
    "member", "is_empty", "h_to_v", "v_to_h", "project", "intersect", "product",
    "embed", "minkowski_sum", "linear_image", "linear_preimage", "affine_hull",
    "recession_cone", "remove_redundancy", "canonicalize", "includes", "set_equal",
    "slack_lp", "implicit_equality_rows",
]


# ============ Membership and emptiness ============

def member(P: HRep, x: Sequence) -> bool:
    return P.contains(vec(x))


def is_empty(P: HRep) -> bool:
    if P.has_trivial_contradiction():
        return True
    return not feasible(P)


def slack_lp(P: HRep, i: int) -> LPResult:
    """
    max{d_i - <c_i, x> : x in P} for inequality row i.

    The result's value is the maximal slack (point = a maximizer); Unbounded
    carries a ray along which the slack grows.
    """
    c_i, d_i = P.ineq_rows()[i]
    res = solve_lp(c_i, P, Sense.MIN)
    if res.status == LPStatus.OPTIMAL:
        return LPResult(LPStatus.OPTIMAL, value=d_i - res.value, point=res.point)
    return res


def implicit_equality_rows(P: HRep) -> List[int]:
    """
    Inequality rows that hold with equality on all of P (P nonempty).

    A row seen strict at any LP point is known to be non-implicit, so rows
    already cleared by an earlier solve are skipped.
    """
    start = feasible_point(P)
    if start is None:
        raise EmptySetError("implicit equalities are undefined on the empty set")
    rows = P.ineq_rows()
    strict = {i for i, (c, d) in enumerate(rows) if dot(c, start) < d}
    tight = []
    for i in range(len(rows)):
        if i in strict:
            continue
        res = slack_lp(P, i)
        if res.status == LPStatus.UNBOUNDED or res.value > 0:
            strict.add(i)
            if res.point is not None:
                strict.update(j for j, (c, d) in enumerate(rows) if dot(c, res.point) < d)
        else:
            tight.append(i)
    return tight


# ============ Canonical forms ============

def _canonical_rows(rows: Sequence[Row], equality: bool) -> Tuple[List[Row], bool]:
    """Canonicalize, drop trivially true rows, dedupe. Flags a contradiction."""
    seen = set()
    out = []
    for a, b in rows:
        a, b = canonical_row(a, b, equality)
        if is_zero(a):
            if (equality and b != 0) or (not equality and b < 0):
                return [], True
            continue
        if (a, b) in seen:
            continue
        seen.add((a, b))
        out.append((a, b))
    return out, False


def _reduced_equalities(rows: Sequence[Row], dim: int) -> Tuple[List[Row], bool]:
    """Row basis of the augmented system [A | b]; flags 0 = nonzero."""
    if not rows:
        return [], False
    basis = row_basis([tuple(a) + (b,) for a, b in rows], dim + 1)
    out = []
    for r in basis:
        if is_zero(r[:-1]):
            return [], True
        out.append(canonical_row(r[:-1], r[-1], equality=True))
    return sorted(out), False


def canonicalize(P: HRep) -> HRep:
    """Canonical rows in a stable order; canonical empty set on a trivial contradiction."""
    eq, bad_eq = _reduced_equalities(P.eq_rows(), P.dim)
    ineq, bad_ineq = _canonical_rows(P.ineq_rows(), equality=False)
    if bad_eq or bad_ineq:
        return HRep.empty(P.dim)
    return HRep.from_rows(P.dim, eq, sorted(ineq))


def remove_redundancy(P: HRep) -> HRep:
    """
    Same set, with implicit equalities promoted, equalities in reduced form
    and every remaining inequality irredundant.
    """
    if is_empty(P):
        return HRep.empty(P.dim)
    implicit = set(implicit_equality_rows(P))
    rows = P.ineq_rows()
    eq, _ = _reduced_equalities(list(P.eq_rows()) + [rows[i] for i in sorted(implicit)], P.dim)
    ineq, _ = _canonical_rows([r for i, r in enumerate(rows) if i not in implicit], equality=False)

    kept = list(ineq)
    i = 0
    while i < len(kept):
        c, d = kept[i]
        rest = HRep.from_rows(P.dim, eq, kept[:i] + kept[i + 1:])
        res = solve_lp(c, rest, Sense.MAX)
        if res.status == LPStatus.OPTIMAL and res.value <= d:
            del kept[i]
        else:
            i += 1
    logger.debug("remove_redundancy: %d/%d inequalities kept, %d equalities",
                 len(kept), P.n_ineq, len(eq))
    return HRep.from_rows(P.dim, eq, kept)


# ============ Double description ============

def _initial_basis(H: Sequence[Vec], k: int) -> List[int]:
    chosen: List[int] = []
    for i, row in enumerate(H):
        if is_zero(row):
            continue
        if rank(Mat(tuple(H[j] for j in chosen + [i]), k)) == len(chosen) + 1:
            chosen.append(i)
            if len(chosen) == k:
                break
    return chosen


def _inverse(B: Sequence[Vec], k: int) -> List[Vec]:
    augmented = Mat(tuple(tuple(B[i]) + unit(k, i) for i in range(k)), 2 * k)
    reduced, _ = rref(augmented)
    return [r[k:] for r in reduced.rows]


def _extreme_rays(H: Sequence[Vec], k: int) -> List[Vec]:
    """
    Extreme rays of the pointed cone {u in Q^k : H u <= 0} (rank H = k).

    Standard double description: seed with k independent rows, whose cone is
    generated by the columns of -B^{-1}, then add the remaining rows one at a
    time, combining adjacent pairs across the new hyperplane. Adjacency uses
    the combinatorial zero-set test, which is exact because the ray set stays
    minimal.
    """
    if k == 0:
        return []
    chosen = _initial_basis(H, k)
    if len(chosen) < k:
        raise RuntimeError("double description needs a pointed cone")
    inv = _inverse([H[i] for i in chosen], k)
    rays: List[Tuple[Vec, FrozenSet[int]]] = []
    for j in range(k):
        r = primitive(neg(tuple(inv[row][j] for row in range(k))))
        rays.append((r, frozenset(chosen[:j] + chosen[j + 1:])))

    chosen_set = set(chosen)
    for i, h in enumerate(H):
        if i in chosen_set:
            continue
        values = [dot(h, r) for r, _ in rays]
        pos = [idx for idx, v in enumerate(values) if v > 0]
        neg_ = [idx for idx, v in enumerate(values) if v < 0]
        new_rays: List[Tuple[Vec, FrozenSet[int]]] = []
        for p in pos:
            for q in neg_:
                common = rays[p][1] & rays[q][1]
                if len(common) < k - 2:
                    continue
                if any(idx not in (p, q) and common <= z for idx, (_, z) in enumerate(rays)):
                    continue
                combined = add(scale(values[p], rays[q][0]), scale(-values[q], rays[p][0]))
                new_rays.append((primitive(combined), common | {i}))
        rays = ([(r, z | {i}) if values[idx] == 0 else (r, z)
                 for idx, (r, z) in enumerate(rays) if values[idx] <= 0]
                + new_rays)
        logger.debug("dd: row %d, +%d/-%d -> %d rays", i, len(pos), len(neg_), len(rays))
    return [r for r, _ in rays]


def h_to_v(P: HRep) -> VRep:
    """
    Generator form of P.

    The lineality space is the kernel of all rows stacked; the pointed part
    P /\\ L-perp is homogenized as {(x, t) : t >= 0, A x = b t, C x <= d t} and
    its extreme rays split into points (t > 0) and rays (t = 0).
    """
    n = P.dim
    if is_empty(P):
        return VRep.empty(n)
    all_rows = Mat(P.eq_A.rows + P.ineq_C.rows, n)
    lineality = nullspace_basis(all_rows)

    eq_rows = [tuple(a) + (-b,) for a, b in P.eq_rows()]
    eq_rows += [tuple(l) + (Fraction(0),) for l in lineality]
    param = nullspace_basis(Mat(tuple(eq_rows), n + 1))
    k = len(param)

    ineq_rows = [tuple(c) + (-d,) for c, d in P.ineq_rows()]
    ineq_rows.append(zeros(n) + (Fraction(-1),))
    H = [tuple(dot(g, nv) for nv in param) for g in ineq_rows]

    points, rays = set(), set()
    for u in _extreme_rays(H, k):
        w = zeros(n + 1)
        for coef, nv in zip(u, param):
            if coef != 0:
                w = add(w, scale(coef, nv))
        t = w[n]
        if t > 0:
            points.add(tuple(x / t for x in w[:n]))
        elif not is_zero(w[:n]):
            rays.add(primitive(w[:n]))
    logger.debug("h_to_v: %d points, %d rays, lineality %d", len(points), len(rays), len(lineality))
    return VRep(n, tuple(sorted(points)), tuple(sorted(rays)), tuple(lineality))


def v_to_h(V: VRep) -> HRep:
    """
    HRep of conv(points) + cone(rays) + span(lineality).

    The valid inequalities (a, beta) form the cone {a.u_i <= beta, a.v_j <= 0,
    a.l = 0}; its rays are the inequalities and its lineality the equalities.
    """
    n = V.dim
    if V.is_empty:
        return HRep.empty(n)
    polar = HRep.from_rows(
        n + 1,
        eq=[(tuple(l) + (Fraction(0),), 0) for l in V.lineality],
        ineq=[(tuple(u) + (Fraction(-1),), 0) for u in V.points]
        + [(tuple(v) + (Fraction(0),), 0) for v in V.rays],
    )
    gens = h_to_v(polar)
    eq = [(g[:n], g[n]) for g in gens.lineality]
    ineq = [(g[:n], g[n]) for g in gens.rays if not is_zero(g[:n])]
    return canonicalize(HRep.from_rows(n, eq, ineq))


# ============ Projection ============

def _eliminate(eqs: List[Row], ineqs: List[Row], j: int) -> Tuple[List[Row], List[Row]]:
    pivot = next((e for e in eqs if e[0][j] != 0), None)
    if pivot is not None:
        a, b = pivot
        def subst(row):
            c, d = row
            if c[j] == 0:
                return row
            f = c[j] / a[j]
            return tuple(x - f * y for x, y in zip(c, a)), d - f * b
        return [subst(e) for e in eqs if e is not pivot], [subst(r) for r in ineqs]

    zero = [r for r in ineqs if r[0][j] == 0]
    pos = [r for r in ineqs if r[0][j] > 0]
    neg_ = [r for r in ineqs if r[0][j] < 0]
    combined = []
    for cp, dp in pos:
        for cn, dn in neg_:
            lp_, ln = -cn[j], cp[j]
            combined.append((tuple(lp_ * x + ln * y for x, y in zip(cp, cn)), lp_ * dp + ln * dn))
    logger.debug("fm: column %d, zero=%d pos=%d neg=%d", j, len(zero), len(pos), len(neg_))
    return eqs, zero + combined


def _elimination_cost(eqs: List[Row], ineqs: List[Row], j: int) -> Tuple[int, int]:
    if any(a[j] != 0 for a, _ in eqs):
        return (0, 0)
    pos = sum(1 for c, _ in ineqs if c[j] > 0)
    neg_ = sum(1 for c, _ in ineqs if c[j] < 0)
    return (1, pos * neg_ - pos - neg_)


def project(P: HRep, keep: Sequence[int]) -> HRep:
    """{x_keep : x in P}, by Fourier-Motzkin elimination of the other coordinates."""
    keep = coord_set(keep, P.dim)
    if is_empty(P):
        return HRep.empty(len(keep))
    drop = [j for j in range(P.dim) if j not in keep]
    eqs, ineqs = list(P.eq_rows()), list(P.ineq_rows())
    while drop:
        j = min(drop, key=lambda col: (_elimination_cost(eqs, ineqs, col), col))
        drop.remove(j)
        eqs, ineqs = _eliminate(eqs, ineqs, j)
        current = canonicalize(HRep.from_rows(P.dim, eqs, ineqs))
        if Settings.FM_PRUNE and current.n_ineq > 1:
            current = remove_redundancy(current)
        eqs, ineqs = list(current.eq_rows()), list(current.ineq_rows())
    result = HRep(
        len(keep),
        Mat(tuple(tuple(a[j] for j in keep) for a, _ in eqs), len(keep)),
        tuple(b for _, b in eqs),
        Mat(tuple(tuple(c[j] for j in keep) for c, _ in ineqs), len(keep)),
        tuple(d for _, d in ineqs),
    )
    return canonicalize(result)


# ============ Set operations ============

def intersect(P: HRep, Q: HRep) -> HRep:
    check_dim("intersect", Q.dim, P.dim)
    return HRep.from_rows(P.dim, P.eq_rows() + Q.eq_rows(), P.ineq_rows() + Q.ineq_rows())


def embed(P: HRep, positions: Sequence[int], dim: int) -> HRep:
    """
    {z in Q^dim : z[positions] in P}: P's coordinates placed into a larger
    product space, all other coordinates free.
    """
    check_dim("embedding positions", len(positions), P.dim)
    if len(set(positions)) != len(positions) or any(p < 0 or p >= dim for p in positions):
        raise DimensionMismatchError(f"invalid embedding positions {list(positions)} into dimension {dim}")

    def scatter(a):
        out = [Fraction(0)] * dim
        for src, dst in enumerate(positions):
            out[dst] = a[src]
        return tuple(out)

    return HRep.from_rows(dim, [(scatter(a), b) for a, b in P.eq_rows()],
                          [(scatter(c), d) for c, d in P.ineq_rows()])


def product(P: HRep, Q: HRep) -> HRep:
    dim = P.dim + Q.dim
    return intersect(embed(P, range(P.dim), dim), embed(Q, range(P.dim, dim), dim))


def _independent(vectors: Sequence[Vec], dim: int) -> Tuple[Vec, ...]:
    vectors = [v for v in vectors if not is_zero(v)]
    if not vectors:
        return ()
    return tuple(row_basis(vectors, dim))


def minkowski_sum(P: HRep, Q: HRep) -> HRep:
    check_dim("minkowski_sum", Q.dim, P.dim)
    VP, VQ = h_to_v(P), h_to_v(Q)
    if VP.is_empty or VQ.is_empty:
        return HRep.empty(P.dim)
    points = sorted({add(p, q) for p in VP.points for q in VQ.points})
    summed = VRep(P.dim, tuple(points), tuple(sorted(set(VP.rays + VQ.rays))),
                  _independent(VP.lineality + VQ.lineality, P.dim))
    return v_to_h(summed)


def linear_image(T: Mat, P: HRep) -> HRep:
    """T(P) through the generator form: images of points, rays and lineality."""
    check_dim("linear_image", T.ncols, P.dim)
    V = h_to_v(P)
    m = T.nrows
    if V.is_empty:
        return HRep.empty(m)
    points = sorted({mat_vec(T, u) for u in V.points})
    rays = sorted({primitive(mat_vec(T, v)) for v in V.rays} - {zeros(m)})
    lineality = _independent([mat_vec(T, l) for l in V.lineality], m)
    return v_to_h(VRep(m, tuple(points), tuple(rays), lineality))


def linear_preimage(T: Mat, Q: HRep) -> HRep:
    """{x : T x in Q}, by composing every row of Q with T."""
    check_dim("linear_preimage", T.nrows, Q.dim)
    return HRep(T.ncols, mat_mul(Q.eq_A, T), Q.eq_b, mat_mul(Q.ineq_C, T), Q.ineq_d)


def affine_hull(P: HRep) -> HRep:
    """aff P as equality rows: explicit equalities plus every implicit one."""
    if is_empty(P):
        raise EmptySetError("empty set has no affine hull")
    rows = P.ineq_rows()
    eq, _ = _reduced_equalities(list(P.eq_rows()) + [rows[i] for i in implicit_equality_rows(P)], P.dim)
    return HRep.from_rows(P.dim, eq)


def recession_cone(P: HRep) -> HRep:
    if is_empty(P):
        raise EmptySetError("recession cone is undefined on the empty set")
    return HRep.from_rows(P.dim, [(a, 0) for a, _ in P.eq_rows()], [(c, 0) for c, _ in P.ineq_rows()])


# ============ Inclusion ============

def _in_recession(Q: HRep, v: Vec, both_ways: bool = False) -> bool:
    if not all(dot(a, v) == 0 for a in Q.eq_A.rows):
        return False
    if both_ways:
        return all(dot(c, v) == 0 for c in Q.ineq_C.rows)
    return all(dot(c, v) <= 0 for c in Q.ineq_C.rows)


def includes(P: HRep, Q: HRep) -> bool:
    """P subset of Q, checked on the generators of P."""
    check_dim("includes", Q.dim, P.dim)
    V = h_to_v(P)
    if V.is_empty:
        return True
    if is_empty(Q):
        return False
    return (all(Q.contains(u) for u in V.points)
            and all(_in_recession(Q, v) for v in V.rays)
            and all(_in_recession(Q, l, both_ways=True) for l in V.lineality))


def set_equal(P: HRep, Q: HRep) -> bool:
    check_dim("set_equal", Q.dim, P.dim)
    return includes(P, Q) and includes(Q, P)
