"""
Exact Linear Algebra
====================

Rational scalars, vectors and matrices plus the row-reduction primitives the
rest of polycalc is built on. There is no floating point anywhere in here.

- Rat is fractions.Fraction (always reduced, positive denominator, 0 == 0/1)
- Vec is a tuple of Fractions; dimension 0 is legal and models the space {0}
- Mat is an immutable row list that remembers its column count, so a 0 x n
  matrix still knows n
"""

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

Rat = Fraction
Vec = Tuple[Fraction, ...]

_RAT_PATTERN = re.compile(r"^-?\d+(/\d+)?$")


def parse_rat(text) -> Fraction:
    """Parse the "p/q" or "p" literal (optional leading minus, decimal digits)."""
    if isinstance(text, bool):
        raise ValueError(f"not a rational literal: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str) or not _RAT_PATTERN.match(text.strip()):
        raise ValueError(f"not a rational literal: {text!r}")
    text = text.strip()
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def format_rat(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def vec(values: Iterable) -> Vec:
    return tuple(Fraction(v) for v in values)


def zeros(n: int) -> Vec:
    return tuple(Fraction(0) for _ in range(n))


def unit(n: int, i: int) -> Vec:
    return tuple(Fraction(1 if j == i else 0) for j in range(n))


def dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    if len(a) != len(b):
        raise ValueError(f"dot: length {len(a)} vs {len(b)}")
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def add(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Vec, b: Vec) -> Vec:
    return tuple(x - y for x, y in zip(a, b))


def scale(k, a: Vec) -> Vec:
    k = Fraction(k)
    return tuple(k * x for x in a)


def neg(a: Vec) -> Vec:
    return tuple(-x for x in a)


def is_zero(a: Sequence[Fraction]) -> bool:
    return all(x == 0 for x in a)


def primitive(a: Sequence[Fraction]) -> Vec:
    """Positive multiple of `a` with coprime integer entries (zero stays zero)."""
    if is_zero(a):
        return tuple(Fraction(0) for _ in a)
    lcm = 1
    for x in a:
        lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
    ints = [int(x * lcm) for x in a]
    g = 0
    for v in ints:
        g = math.gcd(g, abs(v))
    return tuple(Fraction(v // g) for v in ints)


def canonical_row(coeffs: Sequence[Fraction], rhs: Fraction, equality: bool = False) -> Tuple[Vec, Fraction]:
    """
    Canonical form of the row <coeffs, x> (= or <=) rhs.

    Denominators are cleared and the whole row is divided by its gcd. Equality
    rows are additionally signed so that the first nonzero coefficient is
    positive; inequality rows are only ever scaled by positive numbers.
    """
    full = primitive(tuple(coeffs) + (Fraction(rhs),))
    if equality:
        lead = next((x for x in full[:-1] if x != 0), full[-1])
        if lead < 0:
            full = neg(full)
    return full[:-1], full[-1]


@dataclass(frozen=True)
class Mat:
    """Rectangular rational matrix stored by rows."""
    rows: Tuple[Vec, ...]
    ncols: int

    def __post_init__(self):
        for r in self.rows:
            if len(r) != self.ncols:
                raise ValueError(f"Mat: row of length {len(r)} in a {self.ncols}-column matrix")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], ncols: Optional[int] = None) -> "Mat":
        rows = tuple(vec(r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("Mat.from_rows: ncols is required for an empty matrix")
            ncols = len(rows[0])
        return cls(rows, ncols)

    @classmethod
    def empty(cls, ncols: int) -> "Mat":
        return cls((), ncols)

    def column(self, j: int) -> Vec:
        return tuple(r[j] for r in self.rows)

    def select_columns(self, cols: Sequence[int]) -> "Mat":
        return Mat(tuple(tuple(r[j] for j in cols) for r in self.rows), len(cols))

    def stack(self, other: "Mat") -> "Mat":
        if other.ncols != self.ncols:
            raise ValueError(f"Mat.stack: {self.ncols} vs {other.ncols} columns")
        return Mat(self.rows + other.rows, self.ncols)


def identity(n: int) -> Mat:
    return Mat(tuple(unit(n, i) for i in range(n)), n)


def zero_mat(nrows: int, ncols: int) -> Mat:
    return Mat(tuple(zeros(ncols) for _ in range(nrows)), ncols)


def transpose(m: Mat) -> Mat:
    return Mat(tuple(m.column(j) for j in range(m.ncols)), m.nrows)


def mat_vec(m: Mat, v: Sequence[Fraction]) -> Vec:
    if len(v) != m.ncols:
        raise ValueError(f"mat_vec: vector of length {len(v)} for {m.ncols} columns")
    return tuple(dot(r, v) for r in m.rows)


def mat_mul(a: Mat, b: Mat) -> Mat:
    if a.ncols != b.nrows:
        raise ValueError(f"mat_mul: {a.nrows}x{a.ncols} times {b.nrows}x{b.ncols}")
    cols = [b.column(j) for j in range(b.ncols)]
    return Mat(tuple(tuple(dot(r, c) for c in cols) for r in a.rows), b.ncols)


def rref(m: Mat) -> Tuple[Mat, List[int]]:
    """
    Reduced row echelon form by Gauss-Jordan elimination.

    Returns the reduced matrix (same shape, zero rows at the bottom) and the
    pivot column of each nonzero row.
    """
    rows = [list(r) for r in m.rows]
    pivots: List[int] = []
    r = 0
    for c in range(m.ncols):
        if r == len(rows):
            break
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        rows[r] = [x / piv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return Mat(tuple(tuple(row) for row in rows), m.ncols), pivots


def rank(m: Mat) -> int:
    return len(rref(m)[1])


def nullspace_basis(m: Mat) -> List[Vec]:
    """Basis of {v : M v = 0}, one vector per free column of rref(M)."""
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    for f in range(m.ncols):
        if f in pivot_set:
            continue
        v = [Fraction(0)] * m.ncols
        v[f] = Fraction(1)
        for row_idx, pc in enumerate(pivots):
            v[pc] = -reduced.rows[row_idx][f]
        basis.append(tuple(v))
    return basis


def solve_affine(a: Mat, b: Sequence[Fraction]) -> Optional[Tuple[Vec, List[Vec]]]:
    """
    Solve A x = b exactly.

    Returns (particular, kernel basis) or None when the system is inconsistent.
    """
    if len(b) != a.nrows:
        raise ValueError(f"solve_affine: {a.nrows} equations but rhs of length {len(b)}")
    augmented = Mat(tuple(r + (Fraction(bi),) for r, bi in zip(a.rows, b)), a.ncols + 1)
    reduced, pivots = rref(augmented)
    if pivots and pivots[-1] == a.ncols:
        return None
    particular = [Fraction(0)] * a.ncols
    for row_idx, pc in enumerate(pivots):
        particular[pc] = reduced.rows[row_idx][a.ncols]
    return tuple(particular), nullspace_basis(a)


def row_basis(rows: Sequence[Vec], ncols: int) -> List[Vec]:
    """Nonzero rows of the rref of `rows`: a basis of their span."""
    reduced, pivots = rref(Mat(tuple(rows), ncols))
    return [reduced.rows[i] for i in range(len(pivots))]
