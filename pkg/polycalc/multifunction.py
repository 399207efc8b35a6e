"""
Polyhedral Convex Multifunctions
================================

A multifunction F: Q^nx => Q^ny is stored as the HRep of its graph over the
product space with coordinates ordered (x-block, y-block). Every operation is
a graph-level polyhedral operation:

- dom F = pi_X(gph F), rge F = pi_Y(gph F)
- F(x) substitutes x into the graph rows
- F(C) = pi_Y(gph F /\\ (C x Q^ny)), F^-1(D) = F^-1 applied as an image
- gph(G o F): both graphs lifted into (x, z, y)-space, intersected, projected
  onto (x, z)
- gph(F1 + F2): both graphs lifted into (x, y1, y2)-space, intersected, mapped
  by (x, y1, y2) -> (x, y1 + y2)

An empty graph is a legal multifunction.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

from polycalc.errors import DimensionMismatchError, check_dim
from polycalc.exact_linalg import Mat, dot, identity, vec, zeros
from polycalc.polyhedron import (
    HRep, embed, intersect, linear_image, product, project,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MultiFn:
    """F(x) = {y : (x, y) in graph}."""
    nx: int
    ny: int
    graph: HRep

    def __post_init__(self):
        check_dim("multifunction graph", self.graph.dim, self.nx + self.ny)

    @property
    def x_coords(self) -> Tuple[int, ...]:
        return tuple(range(self.nx))

    @property
    def y_coords(self) -> Tuple[int, ...]:
        return tuple(range(self.nx, self.nx + self.ny))

    @classmethod
    def from_blocks(cls, nx: int, ny: int,
                    eq: Iterable[Tuple[Sequence, Sequence, object]] = (),
                    ineq: Iterable[Tuple[Sequence, Sequence, object]] = ()) -> "MultiFn":
        """
        Graph in block form: rows (a1, a2, z) mean <a1, x> + <a2, y> = z, rows
        (c1, c2, d) mean <c1, x> + <c2, y> <= d.
        """
        def join(rows):
            out = []
            for a, b, rhs in rows:
                check_dim("x-block row", len(a), nx)
                check_dim("y-block row", len(b), ny)
                out.append((vec(a) + vec(b), rhs))
            return out
        return cls(nx, ny, HRep.from_rows(nx + ny, join(eq), join(ineq)))

    @classmethod
    def linear_map(cls, T: Mat) -> "MultiFn":
        """Single-valued F(x) = {T x}."""
        n, m = T.ncols, T.nrows
        rows = [(tuple(-x for x in T.rows[i]) + tuple(Fraction(1 if j == i else 0) for j in range(m)), 0)
                for i in range(m)]
        return cls(n, m, HRep.from_rows(n + m, eq=rows))

    @classmethod
    def identity(cls, n: int) -> "MultiFn":
        return cls.linear_map(identity(n))

    @classmethod
    def constant(cls, C: HRep, nx: int) -> "MultiFn":
        """F(x) = C for every x."""
        return cls(nx, C.dim, product(HRep.whole_space(nx), C))


def graph_member(F: MultiFn, x: Sequence, y: Sequence) -> bool:
    x, y = vec(x), vec(y)
    check_dim("x", len(x), F.nx)
    check_dim("y", len(y), F.ny)
    return F.graph.contains(x + y)


def domain(F: MultiFn) -> HRep:
    return project(F.graph, F.x_coords)


def range_(F: MultiFn) -> HRep:
    return project(F.graph, F.y_coords)


def inverse(F: MultiFn) -> MultiFn:
    """gph F^-1 = {(y, x) : (x, y) in gph F}."""
    positions = [F.ny + i for i in range(F.nx)] + list(range(F.ny))
    return MultiFn(F.ny, F.nx, embed(F.graph, positions, F.nx + F.ny))


def value(F: MultiFn, x: Sequence) -> HRep:
    """F(x): the graph rows with x substituted, A2 y = z - A1 x."""
    x = vec(x)
    check_dim("value point", len(x), F.nx)

    def fix(rows):
        return [(a[F.nx:], b - dot(a[:F.nx], x)) for a, b in rows]

    return HRep.from_rows(F.ny, fix(F.graph.eq_rows()), fix(F.graph.ineq_rows()))


def image(F: MultiFn, C: HRep) -> HRep:
    check_dim("image argument", C.dim, F.nx)
    lifted = intersect(F.graph, product(C, HRep.whole_space(F.ny)))
    return project(lifted, F.y_coords)


def preimage(F: MultiFn, D: HRep) -> HRep:
    check_dim("preimage argument", D.dim, F.ny)
    return image(inverse(F), D)


def compose(G: MultiFn, F: MultiFn) -> MultiFn:
    """
    G o F over (x, z, y)-space: gph F on the (x, y) coordinates, gph G on (y, z).
    The graph is the projection of the intersection onto (x, z).
    """
    if F.ny != G.nx:
        raise DimensionMismatchError(f"compose: F maps into dimension {F.ny}, G expects {G.nx}")
    nx, nz, ny = F.nx, G.ny, F.ny
    total = nx + nz + ny
    y_at = [nx + nz + i for i in range(ny)]
    lifted_f = embed(F.graph, list(range(nx)) + y_at, total)
    lifted_g = embed(G.graph, y_at + [nx + i for i in range(nz)], total)
    graph = project(intersect(lifted_f, lifted_g), range(nx + nz))
    logger.debug("compose: %d eq, %d ineq rows in gph(G o F)", graph.n_eq, graph.n_ineq)
    return MultiFn(nx, nz, graph)


def sum_(F1: MultiFn, F2: MultiFn) -> MultiFn:
    """
    F1 + F2 over (x, y1, y2)-space, mapped by A(x, y1, y2) = (x, y1 + y2).
    """
    if (F1.nx, F1.ny) != (F2.nx, F2.ny):
        raise DimensionMismatchError(
            f"sum: {F1.nx}->{F1.ny} and {F2.nx}->{F2.ny} multifunctions")
    nx, ny = F1.nx, F1.ny
    total = nx + 2 * ny
    xs = list(range(nx))
    lifted_1 = embed(F1.graph, xs + [nx + i for i in range(ny)], total)
    lifted_2 = embed(F2.graph, xs + [nx + ny + i for i in range(ny)], total)

    rows = []
    for r in range(nx + ny):
        row = list(zeros(total))
        row[r] = Fraction(1)
        if r >= nx:
            row[r + ny] = Fraction(1)
        rows.append(row)
    A = Mat.from_rows(rows, total)
    return MultiFn(nx, ny, linear_image(A, intersect(lifted_1, lifted_2)))

