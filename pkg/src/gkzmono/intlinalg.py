"""Exact integer and rational linear algebra.

Everything is arbitrary precision: matrices hold Python ints, rational
vectors hold ``fractions.Fraction`` (which the stdlib keeps reduced with a
positive denominator).  All functions are pure and deterministic; identical
inputs give bit-identical outputs.
"""

from __future__ import annotations

import operator
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Optional, Sequence

from .errors import DimensionMismatch, InputError

IntVec = tuple[int, ...]
RatVec = tuple[Fraction, ...]

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse a "p" or "p/q" literal.  Floats and exponents are rejected."""
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise InputError(f"not a rational literal (use p or p/q): {text!r}")
    if "/" in s:
        num, den = s.split("/")
        if int(den) == 0:
            raise InputError(f"zero denominator in rational literal: {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(s))


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class GaussRat:
    """A Gaussian rational re + im*i with exact Fraction components."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @classmethod
    def parse(cls, value) -> "GaussRat":
        """Coerce an int, Fraction, "p/q" string, {"re","im"} dict or GaussRat."""
        if isinstance(value, GaussRat):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(Fraction(value))
        if isinstance(value, str):
            return cls(parse_rational(value))
        if isinstance(value, dict):
            known = set(value) - {"re", "im"}
            if known:
                raise InputError(f"unknown keys in complex literal: {sorted(known)}")
            re_part = value.get("re", 0)
            im_part = value.get("im", 0)
            return cls(cls.parse(re_part).re, cls.parse(im_part).re)
        raise InputError(f"cannot interpret {value!r} as a Gaussian rational")

    @property
    def is_real(self) -> bool:
        return self.im == 0

    @property
    def is_integer(self) -> bool:
        return self.im == 0 and self.re.denominator == 1

    def __add__(self, other: "GaussRat") -> "GaussRat":
        return GaussRat(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussRat") -> "GaussRat":
        return GaussRat(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "GaussRat":
        return GaussRat(-self.re, -self.im)

    def __mul__(self, other):
        if isinstance(other, GaussRat):
            return GaussRat(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        return GaussRat(self.re * other, self.im * other)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return self.re != 0 or self.im != 0

    def __str__(self) -> str:
        if self.im == 0:
            return format_rational(self.re)
        im = format_rational(abs(self.im)) + "*i"
        sign = "-" if self.im < 0 else "+"
        if self.re == 0:
            return ("-" if self.im < 0 else "") + im
        return f"{format_rational(self.re)}{sign}{im}"

    def to_json(self):
        if self.im == 0:
            return format_rational(self.re)
        return {"re": format_rational(self.re), "im": format_rational(self.im)}


class IntMatrix:
    """Immutable integer matrix stored as row-major tuples."""

    __slots__ = ("data", "rows", "cols")

    def __init__(self, rows: Iterable[Iterable[int]], cols: Optional[int] = None):
        data = tuple(tuple(operator.index(x) for x in row) for row in rows)
        if data:
            width = len(data[0])
            if any(len(row) != width for row in data):
                raise DimensionMismatch("ragged rows in matrix")
            if cols is not None and cols != width:
                raise DimensionMismatch(f"expected {cols} columns, got {width}")
            cols = width
        elif cols is None:
            raise DimensionMismatch("empty matrix needs an explicit column count")
        object.__setattr__(self, "data", data)
        object.__setattr__(self, "rows", len(data))
        object.__setattr__(self, "cols", cols)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(
            tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)),
            cols=n,
        )

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> "IntMatrix":
        return cls(
            tuple(tuple(col[i] for col in columns) for i in range(rows)),
            cols=len(columns),
        )

    def row(self, i: int) -> IntVec:
        return self.data[i]

    def column(self, j: int) -> IntVec:
        return tuple(row[j] for row in self.data)

    def columns(self) -> tuple[IntVec, ...]:
        return tuple(self.column(j) for j in range(self.cols))

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            tuple(self.column(j) for j in range(self.cols)), cols=self.rows
        )

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch("matrix product shape mismatch")
        tcols = other.columns()
        return IntMatrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in tcols)
                for row in self.data
            ),
            cols=other.cols,
        )

    def mat_vec(self, v: Sequence) -> tuple:
        if len(v) != self.cols:
            raise DimensionMismatch("matrix-vector shape mismatch")
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.data)

    def det(self) -> int:
        if self.rows != self.cols:
            raise DimensionMismatch("determinant of a non-square matrix")
        return det_int(self.data)

    def rank(self) -> int:
        return rank_int(self.data)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IntMatrix)
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self) -> int:
        return hash((self.data, self.cols))

    def __repr__(self) -> str:
        return f"IntMatrix({[list(r) for r in self.data]!r})"


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and g = x*a + y*b."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        g, x, y = -g, -x, -y
    return g, x, y


def det_int(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot_row = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pivot_row is None:
                return 0
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def rank_int(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q, by exact Gaussian elimination."""
    m = [[Fraction(x) for x in row] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    rank = 0
    for c in range(ncols):
        pivot = next((i for i in range(rank, nrows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = m[rank][c]
        for i in range(rank + 1, nrows):
            if m[i][c] != 0:
                factor = m[i][c] / inv
                m[i] = [a - factor * b for a, b in zip(m[i], m[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def _apply_row_pair(mat: list[list[int]], i: int, k: int, a: int, b: int, c: int, d: int):
    """rows (i, k) <- (a*row_i + b*row_k, c*row_i + d*row_k)."""
    ri, rk = mat[i], mat[k]
    mat[i] = [a * x + b * y for x, y in zip(ri, rk)]
    mat[k] = [c * x + d * y for x, y in zip(ri, rk)]


def hermite_normal_form(M: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite normal form.

    Returns (H, U) with U unimodular, U*M = H, H in row echelon form with
    positive pivots and entries above each pivot reduced into [0, pivot).
    This representative is unique, so H doubles as a canonical form for the
    row lattice of M.
    """
    if M.rows == 0:
        raise DimensionMismatch("hermite_normal_form of an empty matrix")
    h = [list(row) for row in M.data]
    u = [list(row) for row in IntMatrix.identity(M.rows).data]
    nrows = M.rows
    pivot_row = 0
    for c in range(M.cols):
        for i in range(pivot_row + 1, nrows):
            if h[i][c] == 0:
                continue
            a, b = h[pivot_row][c], h[i][c]
            if a != 0 and b % a == 0:
                q = b // a
                h[i] = [x - q * y for x, y in zip(h[i], h[pivot_row])]
                u[i] = [x - q * y for x, y in zip(u[i], u[pivot_row])]
                continue
            g, s, t = xgcd(a, b)
            p, q = a // g, b // g
            _apply_row_pair(h, pivot_row, i, s, t, -q, p)
            _apply_row_pair(u, pivot_row, i, s, t, -q, p)
        if h[pivot_row][c] != 0:
            if h[pivot_row][c] < 0:
                h[pivot_row] = [-x for x in h[pivot_row]]
                u[pivot_row] = [-x for x in u[pivot_row]]
            piv = h[pivot_row][c]
            for i in range(pivot_row):
                q = h[i][c] // piv
                if q:
                    h[i] = [x - q * y for x, y in zip(h[i], h[pivot_row])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[pivot_row])]
            pivot_row += 1
            if pivot_row == nrows:
                break
    return IntMatrix(h, cols=M.cols), IntMatrix(u, cols=nrows)


@dataclass(frozen=True)
class SmithDecomposition:
    """U*A*V = S with U, V unimodular and S diagonal, d1 | d2 | ..."""

    U: IntMatrix
    S: IntMatrix
    V: IntMatrix

    def invariant_factors(self) -> IntVec:
        k = min(self.S.rows, self.S.cols)
        diag = tuple(self.S.data[i][i] for i in range(k))
        return tuple(d for d in diag if d != 0)

    def rank(self) -> int:
        return len(self.invariant_factors())


def smith_normal_form(M: IntMatrix) -> SmithDecomposition:
    """Smith normal form with both transforms, textbook pivoting.

    After each pivot is isolated we force it to divide the remaining
    submatrix (by folding an offending row into the pivot row), which yields
    the divisibility chain directly.
    """
    h = [list(row) for row in M.data]
    u = [list(row) for row in IntMatrix.identity(M.rows).data]
    v = [list(row) for row in IntMatrix.identity(M.cols).data]
    nrows, ncols = M.rows, M.cols

    def col_op(j: int, k: int, a: int, b: int, c: int, d: int):
        # cols (j, k) <- (a*col_j + b*col_k, c*col_j + d*col_k)
        for row in h:
            x, y = row[j], row[k]
            row[j], row[k] = a * x + b * y, c * x + d * y
        for row in v:
            x, y = row[j], row[k]
            row[j], row[k] = a * x + b * y, c * x + d * y

    t = 0
    while t < min(nrows, ncols):
        candidates = [
            (abs(h[i][j]), i, j)
            for i in range(t, nrows)
            for j in range(t, ncols)
            if h[i][j] != 0
        ]
        if not candidates:
            break
        _, pi, pj = min(candidates)
        if pi != t:
            h[t], h[pi] = h[pi], h[t]
            u[t], u[pi] = u[pi], u[t]
        if pj != t:
            col_op(t, pj, 0, 1, 1, 0)
        while True:
            for i in range(t + 1, nrows):
                if h[i][t] == 0:
                    continue
                a, b = h[t][t], h[i][t]
                if b % a == 0:
                    q = b // a
                    h[i] = [x - q * y for x, y in zip(h[i], h[t])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[t])]
                    continue
                g, s, tt = xgcd(a, b)
                _apply_row_pair(h, t, i, s, tt, -(b // g), a // g)
                _apply_row_pair(u, t, i, s, tt, -(b // g), a // g)
            for j in range(t + 1, ncols):
                if h[t][j] == 0:
                    continue
                a, b = h[t][t], h[t][j]
                if b % a == 0:
                    col_op(t, j, 1, 0, -(b // a), 1)
                    continue
                g, s, tt = xgcd(a, b)
                col_op(t, j, s, tt, -(b // g), a // g)
            if any(h[i][t] != 0 for i in range(t + 1, nrows)):
                continue
            offender = next(
                (
                    (i, j)
                    for i in range(t + 1, nrows)
                    for j in range(t + 1, ncols)
                    if h[i][j] % h[t][t] != 0
                ),
                None,
            )
            if offender is None:
                break
            i, _ = offender
            h[t] = [x + y for x, y in zip(h[t], h[i])]
            u[t] = [x + y for x, y in zip(u[t], u[i])]
        if h[t][t] < 0:
            h[t] = [-x for x in h[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return SmithDecomposition(
        IntMatrix(u, cols=nrows), IntMatrix(h, cols=ncols), IntMatrix(v, cols=ncols)
    )


@lru_cache(maxsize=1024)
def kernel_lattice_basis(A: IntMatrix) -> tuple[IntVec, ...]:
    """Z-basis of the saturated integer kernel lattice {u : A*u = 0}.

    Taken from the right Smith transform and put in HNF-canonical order, so
    the result is a deterministic function of A.  Empty tuple when the
    kernel is trivial.
    """
    n = A.cols
    if n == 0:
        return ()
    if A.rows == 0:
        return tuple(IntMatrix.identity(n).data)
    snf = smith_normal_form(A)
    rank = snf.rank()
    if rank == n:
        return ()
    basis = [snf.V.column(j) for j in range(rank, n)]
    H, _ = hermite_normal_form(IntMatrix(basis, cols=n))
    rows = tuple(row for row in H.data if any(row))
    assert len(rows) == n - rank
    return rows


def solve_rational(A: IntMatrix, b: Sequence) -> Optional[RatVec]:
    """One exact solution of A*x = b over Q (free variables set to 0).

    Returns None when the system is inconsistent.
    """
    if len(b) != A.rows:
        raise DimensionMismatch("right-hand side length does not match rows")
    aug = [[Fraction(x) for x in row] + [Fraction(v)] for row, v in zip(A.data, b)]
    nrows, ncols = A.rows, A.cols
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if aug[i][c] != 0), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = aug[r][c]
        aug[r] = [x / inv for x in aug[r]]
        for i in range(nrows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append((r, c))
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if aug[i][ncols] != 0:
            return None
    x = [Fraction(0)] * ncols
    for row, col in pivots:
        x[col] = aug[row][ncols]
    return tuple(x)


def lattice_member(L: Sequence[Sequence[int]], v: Sequence) -> bool:
    """Decide whether v is an integer combination of the vectors in L."""
    fv = [Fraction(x) for x in v]
    for vec in L:
        if len(vec) != len(fv):
            raise DimensionMismatch("lattice vectors and target differ in length")
    if any(q.denominator != 1 for q in fv):
        return False
    residue = [int(q) for q in fv]
    if not L:
        return all(x == 0 for x in residue)
    H, _ = hermite_normal_form(IntMatrix(L, cols=len(fv)))
    for row in H.data:
        pivot_col = next((j for j, x in enumerate(row) if x != 0), None)
        if pivot_col is None:
            break
        q, rem = divmod(residue[pivot_col], row[pivot_col])
        if rem != 0:
            return False
        if q:
            residue = [x - q * y for x, y in zip(residue, row)]
    return all(x == 0 for x in residue)


def primitive_vector(v: Sequence[int]) -> IntVec:
    """Divide an integer vector by the gcd of its entries (zero stays zero)."""
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    if g <= 1:
        return tuple(v)
    return tuple(x // g for x in v)


def clear_denominators(v: Sequence[Fraction]) -> IntVec:
    """Scale a rational vector by the positive lcm of denominators."""
    lcm = 1
    for q in v:
        lcm = lcm * q.denominator // gcd(lcm, q.denominator)
    return tuple(int(q * lcm) for q in v)
