"""
Representations
===============

Value types shared by the engine and the oracles:

- HRep: {x : eq_A x = eq_b, ineq_C x <= ineq_d}; the equality block cuts out an
  affine subspace, each inequality row a closed half-space
- VRep: conv(points) + cone(rays) + span(lineality)
- CoordSet: strictly increasing coordinate indices (projection targets)
- ExtReal: a rational or +-infinity, with inf(empty) = +inf

`lp` and `oracle` import these types and never the algorithms they
cross-check.
"""

import enum
import functools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple

from polycalc.errors import DimensionMismatchError, check_dim
from polycalc.exact_linalg import Mat, Vec, dot, format_rat, is_zero, vec, zeros

CoordSet = Tuple[int, ...]


def coord_set(indices: Iterable[int], dim: int) -> CoordSet:
    """Validate and sort a coordinate selection into `dim`-space."""
    out = tuple(sorted(set(int(i) for i in indices)))
    for i in out:
        if i < 0 or i >= dim:
            raise DimensionMismatchError(f"coordinate {i} out of range for dimension {dim}")
    return out


Row = Tuple[Vec, Fraction]


@dataclass(frozen=True)
class HRep:
    """A polyhedron given by equality and inequality rows."""
    dim: int
    eq_A: Mat
    eq_b: Vec
    ineq_C: Mat
    ineq_d: Vec

    def __post_init__(self):
        check_dim("HRep equality block", self.eq_A.ncols, self.dim)
        check_dim("HRep inequality block", self.ineq_C.ncols, self.dim)
        check_dim("HRep equality rhs", len(self.eq_b), self.eq_A.nrows)
        check_dim("HRep inequality rhs", len(self.ineq_d), self.ineq_C.nrows)

    @classmethod
    def from_rows(cls, dim: int, eq: Iterable[Tuple[Iterable, object]] = (),
                  ineq: Iterable[Tuple[Iterable, object]] = ()) -> "HRep":
        """Build from (coeffs, rhs) pairs; coefficients may be ints or Fractions."""
        eq = [(vec(a), Fraction(b)) for a, b in eq]
        ineq = [(vec(a), Fraction(b)) for a, b in ineq]
        return cls(
            dim,
            Mat(tuple(a for a, _ in eq), dim),
            tuple(b for _, b in eq),
            Mat(tuple(a for a, _ in ineq), dim),
            tuple(b for _, b in ineq),
        )

    @classmethod
    def whole_space(cls, dim: int) -> "HRep":
        return cls.from_rows(dim)

    @classmethod
    def empty(cls, dim: int) -> "HRep":
        """Canonical empty set: the single row 0.x <= -1."""
        return cls.from_rows(dim, ineq=[(zeros(dim), -1)])

    @property
    def n_eq(self) -> int:
        return self.eq_A.nrows

    @property
    def n_ineq(self) -> int:
        return self.ineq_C.nrows

    def eq_rows(self) -> Tuple[Row, ...]:
        return tuple(zip(self.eq_A.rows, self.eq_b))

    def ineq_rows(self) -> Tuple[Row, ...]:
        return tuple(zip(self.ineq_C.rows, self.ineq_d))

    def with_rows(self, eq: Sequence[Row], ineq: Sequence[Row]) -> "HRep":
        return HRep.from_rows(self.dim, eq, ineq)

    def contains(self, x: Sequence[Fraction]) -> bool:
        check_dim("point", len(x), self.dim)
        return (all(dot(a, x) == b for a, b in self.eq_rows())
                and all(dot(c, x) <= d for c, d in self.ineq_rows()))

    def has_trivial_contradiction(self) -> bool:
        """A zero row with an unsatisfiable right-hand side."""
        return (any(is_zero(a) and b != 0 for a, b in self.eq_rows())
                or any(is_zero(c) and d < 0 for c, d in self.ineq_rows()))


@dataclass(frozen=True)
class VRep:
    """Generator form conv(points) + cone(rays) + span(lineality)."""
    dim: int
    points: Tuple[Vec, ...] = ()
    rays: Tuple[Vec, ...] = ()
    lineality: Tuple[Vec, ...] = ()

    def __post_init__(self):
        for group in (self.points, self.rays, self.lineality):
            for g in group:
                check_dim("VRep generator", len(g), self.dim)
        for g in self.rays + self.lineality:
            if is_zero(g):
                raise ValueError("VRep rays and lineality vectors must be nonzero")
        if not self.points and (self.rays or self.lineality):
            raise ValueError("VRep without points must not carry rays or lineality")

    @classmethod
    def empty(cls, dim: int) -> "VRep":
        return cls(dim)

    @property
    def is_empty(self) -> bool:
        return not self.points


class ExtKind(str, enum.Enum):
    FINITE = "finite"
    PLUS_INF = "+inf"
    MINUS_INF = "-inf"


@functools.total_ordering
@dataclass(frozen=True)
class ExtReal:
    """An element of [-inf, +inf] with exact finite values."""
    kind: ExtKind
    value: Optional[Fraction] = field(default=None)

    def __post_init__(self):
        if (self.kind == ExtKind.FINITE) != (self.value is not None):
            raise ValueError("ExtReal: a value is present exactly for finite elements")

    @classmethod
    def finite(cls, value) -> "ExtReal":
        return cls(ExtKind.FINITE, Fraction(value))

    @classmethod
    def plus_inf(cls) -> "ExtReal":
        return cls(ExtKind.PLUS_INF)

    @classmethod
    def minus_inf(cls) -> "ExtReal":
        return cls(ExtKind.MINUS_INF)

    @property
    def is_finite(self) -> bool:
        return self.kind == ExtKind.FINITE

    def _key(self):
        if self.kind == ExtKind.MINUS_INF:
            return (0, Fraction(0))
        if self.kind == ExtKind.PLUS_INF:
            return (2, Fraction(0))
        return (1, self.value)

    def __lt__(self, other: "ExtReal") -> bool:
        return self._key() < other._key()

    def __str__(self) -> str:
        if self.kind == ExtKind.FINITE:
            return format_rat(self.value)
        return self.kind.value
