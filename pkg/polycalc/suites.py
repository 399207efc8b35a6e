"""
Property Suites
===============

Seeded random instances checked against the brute-force oracles. Each suite
compares one construction with an independent LP- or enumeration-based
answer on every point of the sampling grid.

Instance i of a suite run with seed s draws from default_rng([s, i]), so a
run is replayable instance by instance and sharding across worker processes
does not change the report.
"""

import functools
import logging
import multiprocessing
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from config import Settings
from polycalc.convex_function import PCFunc, evaluate, optimal_value_fn, solution_map
from polycalc.errors import PolyhedralError
from polycalc.exact_linalg import Mat, dot, format_rat
from polycalc.lp import LPStatus, Sense, solve_lp
from polycalc.multifunction import MultiFn, compose, domain, graph_member, image, sum_
from polycalc.oracle import (
    enumerate_basic_solutions, iri_member_oracle, lifted_projection_oracle,
    linear_image_oracle, optval_oracle, pointwise_relation_oracle, pointwise_sum_oracle,
    sample_points,
)
from polycalc.polyhedron import (
    HRep, VRep, h_to_v, intersect, is_empty, linear_image, member, project, set_equal, v_to_h,
)
from polycalc.relint import (
    relative_interior, relative_interior_point, ri_graph_member_decomposed, ri_member,
)

logger = logging.getLogger(__name__)

COEF = 3
LP_MAX_ROWS = 6


# ============ Random Instances ============

def random_hrep(rng: np.random.Generator, dim: int, max_rows: int, eq_prob: float = 0.15) -> HRep:
    """Rows with integer coefficients in [-3, 3]; right-hand sides in [-1, 3]."""
    n_rows = int(rng.integers(1, max_rows + 1))
    eq, ineq = [], []
    for _ in range(n_rows):
        coeffs = [int(v) for v in rng.integers(-COEF, COEF + 1, size=dim)]
        rhs = int(rng.integers(-1, COEF + 1))
        (eq if rng.random() < eq_prob else ineq).append((coeffs, rhs))
    return HRep.from_rows(dim, eq, ineq)


def random_nonempty_hrep(rng: np.random.Generator, dim: int, max_rows: int, attempts: int = 100) -> HRep:
    for _ in range(attempts):
        P = random_hrep(rng, dim, max_rows)
        if not is_empty(P):
            return P
    logger.warning("no nonempty instance after %d draws, using the whole space", attempts)
    return HRep.whole_space(dim)


def random_simplex(dim: int, bound: int = COEF) -> HRep:
    """{x : x_i >= -bound, x_1 + ... + x_n <= bound}, bounded with dim + 1 rows."""
    rows = []
    for i in range(dim):
        e = [0] * dim
        e[i] = -1
        rows.append((e, bound))
    rows.append(([1] * dim, bound))
    return HRep.from_rows(dim, ineq=rows)


def random_matrix(rng: np.random.Generator, nrows: int, ncols: int) -> Mat:
    return Mat.from_rows(
        [[int(v) for v in rng.integers(-COEF, COEF + 1, size=ncols)] for _ in range(nrows)], ncols)


def random_multifn(rng: np.random.Generator, nx: int, ny: int, max_rows: int = 6) -> MultiFn:
    return MultiFn(nx, ny, random_hrep(rng, nx + ny, max_rows))


def _grid(P: HRep, rng: np.random.Generator) -> list:
    V = h_to_v(P) if not is_empty(P) else VRep.empty(P.dim)
    return sample_points(V, int(rng.integers(2 ** 31)))


def _fmt(v) -> str:
    return "(" + ", ".join(format_rat(x) for x in v) + ")"


# ============ Suites ============
# Each check returns a list of failure details for one instance.

def check_roundtrip(rng: np.random.Generator) -> List[str]:
    dim = int(rng.integers(1, 5))
    P = random_hrep(rng, dim, 8)
    failures = []
    if not set_equal(P, v_to_h(h_to_v(P))):
        failures.append(f"v_to_h(h_to_v(P)) differs from P (dim {dim})")
    if dim <= 3 and P.n_eq + P.n_ineq <= 6:
        if not set_equal(P, v_to_h(enumerate_basic_solutions(P))):
            failures.append("basic-solution enumeration disagrees with P")
    return failures


def random_lp_instance(rng: np.random.Generator) -> Tuple[HRep, List[int]]:
    """A bounded set of at most LP_MAX_ROWS rows and an integer objective."""
    dim = int(rng.integers(1, 4))
    outer = random_simplex(dim)
    extra = random_hrep(rng, dim, LP_MAX_ROWS - outer.n_ineq)
    P = HRep.from_rows(dim, extra.eq_rows(), outer.ineq_rows() + extra.ineq_rows())
    return P, [int(v) for v in rng.integers(-COEF, COEF + 1, size=dim)]


def check_lp(rng: np.random.Generator) -> List[str]:
    P, c = random_lp_instance(rng)
    res = solve_lp(c, P, Sense.MAX)
    V = enumerate_basic_solutions(P)
    if V.is_empty:
        return [] if res.status == LPStatus.INFEASIBLE else [f"simplex says {res.status.value} on an empty set"]
    if res.status != LPStatus.OPTIMAL:
        return [f"simplex says {res.status.value} on a bounded nonempty set"]
    best = max(dot(c, u) for u in V.points)
    if res.value != best:
        return [f"simplex optimum {format_rat(res.value)} != best vertex {format_rat(best)}"]
    return []


def check_projection(rng: np.random.Generator) -> List[str]:
    P = random_hrep(rng, 4, 8)
    keep = sorted(int(i) for i in rng.choice(4, size=2, replace=False))
    R = project(P, keep)
    return [f"x={_fmt(x)}: projection says {member(R, x)}"
            for x in _grid(R, rng)
            if member(R, x) != lifted_projection_oracle(P, keep, x)]


def check_linear_image(rng: np.random.Generator) -> List[str]:
    n, m = int(rng.integers(1, 4)), int(rng.integers(1, 4))
    T = random_matrix(rng, m, n)
    D = random_hrep(rng, n, 5)
    img = linear_image(T, D)
    failures = [f"y={_fmt(y)}: image says {member(img, y)}"
                for y in _grid(img, rng)
                if member(img, y) != linear_image_oracle(T, D, y)]
    if not set_equal(img, image(MultiFn.linear_map(T), D)):
        failures.append("generator image and graph image of T differ")
    return failures


def check_compose(rng: np.random.Generator) -> List[str]:
    nx, ny, nz = (int(v) for v in rng.integers(1, 3, size=3))
    F = random_multifn(rng, nx, ny)
    G = random_multifn(rng, ny, nz)
    H = compose(G, F)
    failures = []
    for p in _grid(H.graph, rng):
        x, z = p[:nx], p[nx:]
        if graph_member(H, x, z) != pointwise_relation_oracle(F, x, z, G.graph):
            failures.append(f"(x, z)={_fmt(p)}: composition says {graph_member(H, x, z)}")
    return failures


def check_sum(rng: np.random.Generator) -> List[str]:
    nx, ny = (int(v) for v in rng.integers(1, 3, size=2))
    F1 = random_multifn(rng, nx, ny)
    F2 = random_multifn(rng, nx, ny)
    S = sum_(F1, F2)
    failures = []
    for p in _grid(S.graph, rng):
        x, z = p[:nx], p[nx:]
        if graph_member(S, x, z) != pointwise_sum_oracle(F1, F2, x, z):
            failures.append(f"(x, z)={_fmt(p)}: sum says {graph_member(S, x, z)}")
    if not set_equal(domain(S), intersect(domain(F1), domain(F2))):
        failures.append("dom(F1 + F2) differs from dom F1 /\\ dom F2")
    return failures


def check_optval(rng: np.random.Generator) -> List[str]:
    nx, ny = (int(v) for v in rng.integers(1, 3, size=2))
    F = random_multifn(rng, nx, ny)
    n_pieces = int(rng.integers(1, 4))
    phi = PCFunc.from_pieces([
        ([int(v) for v in rng.integers(-COEF, COEF + 1, size=nx + ny)], int(rng.integers(-COEF, COEF + 1)))
        for _ in range(n_pieces)
    ])
    mu = optimal_value_fn(phi, F)
    failures = []
    for x in _grid(domain(F), rng):
        got, want = evaluate(mu, x), optval_oracle(phi, F, x)
        if got != want:
            failures.append(f"x={_fmt(x)}: mu={got}, direct LP={want}")
        elif want.is_finite and is_empty(solution_map(phi, F, x)):
            failures.append(f"x={_fmt(x)}: finite value {want} but no minimizer")
    return failures


def check_relint(rng: np.random.Generator) -> List[str]:
    P = random_nonempty_hrep(rng, int(rng.integers(1, 4)), 6)
    failures = []
    for x in _grid(P, rng):
        if member(P, x) and ri_member(P, x) != iri_member_oracle(P, x):
            failures.append(f"x={_fmt(x)}: index-set formula says {ri_member(P, x)}")
    p = relative_interior_point(P)
    if not relative_interior(P).contains(p):
        failures.append(f"relative interior point {_fmt(p)} is not relatively interior")
    return failures


def check_ri_graph(rng: np.random.Generator) -> List[str]:
    nx, ny = (int(v) for v in rng.integers(1, 4, size=2))
    F = MultiFn(nx, ny, random_nonempty_hrep(rng, nx + ny, 6))
    failures = []
    for p in _grid(F.graph, rng):
        x, y = p[:nx], p[nx:]
        if ri_member(F.graph, p) != ri_graph_member_decomposed(F, x, y):
            failures.append(f"(x, y)={_fmt(p)}: graph says {ri_member(F.graph, p)}")
    return failures


# ============ Registry ============

@dataclass
class SuiteSpec:
    """One property suite and the instance count it runs by default."""
    name: str
    description: str
    default_count: int
    check: Callable[[np.random.Generator], List[str]]


SUITE_REGISTRY: Dict[str, SuiteSpec] = {
    spec.name: spec for spec in (
        SuiteSpec("roundtrip", "set_equal(P, v_to_h(h_to_v(P))); enumeration agrees", 200, check_roundtrip),
        SuiteSpec("lp", "simplex optimum equals the best vertex value", 300, check_lp),
        SuiteSpec("projection", "projection membership equals lifted LP feasibility", 200, check_projection),
        SuiteSpec("linear-image", "image membership equals {x in D : Tx = y} feasibility", 100, check_linear_image),
        SuiteSpec("compose", "graph of G o F equals two-stage feasibility", 100, check_compose),
        SuiteSpec("sum", "graph of F1 + F2 equals joint feasibility; dom is the intersection", 100, check_sum),
        SuiteSpec("optval", "epi mu evaluation equals the direct parametric LP", 100, check_optval),
        SuiteSpec("relint", "index-set relative interior equals the cone test", 200, check_relint),
        SuiteSpec("ri-graph", "ri of the graph decomposes over dom F and F(x)", 100, check_ri_graph),
    )
}


def _run_instance(name: str, seed: int, index: int) -> List[str]:
    rng = np.random.default_rng([seed, index])
    try:
        return SUITE_REGISTRY[name].check(rng)
    except PolyhedralError as e:
        return [f"{e.kind}: {e}"]


def run_suite(name: str, seed: int = 0, count: Optional[int] = None, workers: Optional[int] = None) -> dict:
    """
    Run `count` instances of a suite and collect the report. Raises KeyError
    for an unknown suite name and ValueError for a count below 1.
    """
    spec = SUITE_REGISTRY[name]
    if count is None:
        count = Settings.CHECK_COUNT or spec.default_count
    if count < 1:
        raise ValueError(f"suite {name}: count must be at least 1, got {count}")
    workers = workers or Settings.CHECK_WORKERS
    task = functools.partial(_run_instance, name, seed)

    logger.info("suite %s: %d instances, seed %d, %d worker(s)", name, count, seed, workers)
    if workers > 1:
        with multiprocessing.Pool(processes=workers) as pool:
            results = pool.map(task, range(count))
    else:
        results = [task(i) for i in range(count)]

    failures = [{"instance": i, "detail": detail}
                for i, details in enumerate(results) for detail in details]
    failed = sum(1 for details in results if details)
    return {
        "suite": name,
        "seed": seed,
        "count": count,
        "passed": count - failed,
        "failed": failed,
        "failures": failures,
    }
