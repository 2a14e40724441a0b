"""Exact dense linear algebra over the rational numbers.

Every entry is a ``fractions.Fraction``; there is no floating point and no
tolerance anywhere in this package.  Matrices are small (total dimensions of
the order of tens), so the elimination routines favour exactness and
determinism over asymptotics: Gaussian elimination with the first nonzero
pivot, reduced row echelon form, and pivot-normalized kernel bases.

Floats are rejected on input so a rounding error can never sneak in.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

RationalLike = Union[int, str, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def frac(value: RationalLike) -> Fraction:
    """Coerce an int, canonical string ("3", "-1/2") or Fraction to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}: {value!r}")


def frac_str(value: Fraction) -> str:
    """Canonical string form: "3", "-1/2"."""
    return str(value)


Vector = tuple[Fraction, ...]


def vector(values: Iterable[RationalLike]) -> Vector:
    return tuple(frac(v) for v in values)


class Matrix:
    """Immutable dense rational matrix, row-major.

    0xN and Nx0 matrices are legal and represent maps to or from the zero
    space.
    """

    __slots__ = ("rows", "cols", "_e")

    def __init__(self, rows: int, cols: int, entries: Iterable[RationalLike]):
        self.rows = rows
        self.cols = cols
        self._e = tuple(frac(v) for v in entries)
        if len(self._e) != rows * cols:
            raise ValueError(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(self._e)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[RationalLike]], cols: int | None = None) -> "Matrix":
        nrows = len(rows)
        if nrows == 0:
            if cols is None:
                cols = 0
            return cls(0, cols, ())
        ncols = len(rows[0])
        if cols is not None and cols != ncols:
            raise ValueError(f"expected {cols} columns, got {ncols}")
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(nrows, ncols, (v for r in rows for v in r))

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, (_ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, (_ONE if i == j else _ZERO for i in range(n) for j in range(n)))

    @classmethod
    def column(cls, values: Iterable[RationalLike]) -> "Matrix":
        col = vector(values)
        return cls(len(col), 1, col)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[RationalLike]], rows: int | None = None) -> "Matrix":
        if len(columns) == 0:
            return cls(rows if rows is not None else 0, 0, ())
        nrows = len(columns[0])
        if rows is not None and rows != nrows:
            raise ValueError(f"expected {rows} rows, got {nrows}")
        if any(len(c) != nrows for c in columns):
            raise ValueError("ragged columns")
        return cls(nrows, len(columns), (frac(columns[j][i]) for i in range(nrows) for j in range(len(columns))))

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"entry ({i},{j}) out of range for {self.rows}x{self.cols}")
        return self._e[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self._e[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> Vector:
        return tuple(self._e[i * self.cols + j] for i in range(self.rows))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def is_zero(self) -> bool:
        return all(v == 0 for v in self._e)

    def transpose(self) -> "Matrix":
        return Matrix(
            self.cols,
            self.rows,
            (self._e[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols and self._e == other._e

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._e))

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} + {other.shape}")
        return Matrix(self.rows, self.cols, (a + b for a, b in zip(self._e, other._e)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} - {other.shape}")
        return Matrix(self.rows, self.cols, (a - b for a, b in zip(self._e, other._e)))

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, (-a for a in self._e))

    def scale(self, c: RationalLike) -> "Matrix":
        c = frac(c)
        return Matrix(self.rows, self.cols, (c * a for a in self._e))

    def __mul__(self, other: Union["Matrix", RationalLike]) -> "Matrix":
        if isinstance(other, Matrix):
            return self.matmul(other)
        return self.scale(other)

    def __rmul__(self, other: RationalLike) -> "Matrix":
        return self.scale(other)

    def matmul(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        n, m, p = self.rows, self.cols, other.cols
        out = [_ZERO] * (n * p)
        se, oe = self._e, other._e
        for i in range(n):
            base = i * m
            for k in range(m):
                a = se[base + k]
                if a == 0:
                    continue
                ob = k * p
                rb = i * p
                for j in range(p):
                    b = oe[ob + j]
                    if b != 0:
                        out[rb + j] += a * b
        return Matrix(n, p, out)

    def apply(self, v: Sequence[RationalLike]) -> Vector:
        """Matrix-vector product."""
        if len(v) != self.cols:
            raise ValueError(f"cannot apply {self.shape} to a vector of length {len(v)}")
        vv = vector(v)
        out = []
        for i in range(self.rows):
            base = i * self.cols
            out.append(sum((self._e[base + j] * vv[j] for j in range(self.cols)), _ZERO))
        return tuple(out)

    def to_lists(self) -> list[list[str]]:
        """Rows of canonical rational strings, for JSON interchange."""
        return [[frac_str(v) for v in self.row(i)] for i in range(self.rows)]

    @classmethod
    def from_lists(cls, data: Sequence[Sequence[RationalLike]], rows: int | None = None, cols: int | None = None) -> "Matrix":
        m = cls.from_rows([list(r) for r in data], cols=cols)
        if rows is not None and m.rows != rows:
            raise ValueError(f"expected {rows} rows, got {m.rows}")
        if cols is not None and m.cols != cols:
            raise ValueError(f"expected {cols} columns, got {m.cols}")
        return m

    def __repr__(self) -> str:
        if self.rows == 0 or self.cols == 0:
            return f"Matrix({self.rows}x{self.cols})"
        body = "; ".join(" ".join(str(v) for v in self.row(i)) for i in range(self.rows))
        return f"Matrix[{body}]"


# ---------------------------------------------------------------------------
# Elimination core.  Rows are kept as sparse {column: value} dicts: the
# intertwiner systems assembled elsewhere are very sparse and this keeps the
# exact arithmetic fast.

SparseRow = dict[int, Fraction]


def _to_sparse_rows(m: Matrix) -> list[SparseRow]:
    rows = []
    for i in range(m.rows):
        r = m.row(i)
        rows.append({j: v for j, v in enumerate(r) if v != 0})
    return rows


def _row_sub(row: SparseRow, factor: Fraction, pivot_row: SparseRow) -> None:
    # row -= factor * pivot_row, dropping exact zeros
    for c, v in pivot_row.items():
        nv = row.get(c, _ZERO) - factor * v
        if nv:
            row[c] = nv
        else:
            row.pop(c, None)


def _rref(rows: list[SparseRow], ncols: int) -> tuple[list[SparseRow], list[int]]:
    """Reduced row echelon form.

    Pivot policy: columns left to right, first remaining row with a nonzero
    entry (exact Gaussian elimination, no tolerances).  Returns the nonzero
    reduced rows (one per pivot, in pivot order) and the pivot columns.
    """
    work = [dict(r) for r in rows if r]
    reduced: list[SparseRow] = []
    pivots: list[int] = []
    for col in range(ncols):
        piv_idx = None
        for idx, row in enumerate(work):
            if col in row:
                piv_idx = idx
                break
        if piv_idx is None:
            continue
        piv = work.pop(piv_idx)
        inv = _ONE / piv[col]
        if inv != 1:
            piv = {c: v * inv for c, v in piv.items()}
        for row in work:
            f = row.get(col)
            if f is not None:
                _row_sub(row, f, piv)
        for row in reduced:
            f = row.get(col)
            if f is not None:
                _row_sub(row, f, piv)
        reduced.append(piv)
        pivots.append(col)
    return reduced, pivots


def sparse_kernel(rows: list[SparseRow], ncols: int) -> list[Vector]:
    """Pivot-normalized kernel basis of a sparse homogeneous system."""
    reduced, pivots = _rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [_ZERO] * ncols
        v[free] = _ONE
        for row, p in zip(reduced, pivots):
            coeff = row.get(free)
            if coeff is not None:
                v[p] = -coeff
        basis.append(tuple(v))
    return basis


def sparse_affine_solve(
    rows: list[SparseRow], rhs: Sequence[Fraction], ncols: int
) -> tuple[Vector | None, list[Vector]]:
    """Solve a sparse inhomogeneous system.

    Returns (particular solution with free variables zero, kernel basis of the
    homogeneous part); the particular solution is None when inconsistent.
    """
    aug_rows = [dict(r) for r in rows]
    for i, val in enumerate(rhs):
        if val != 0:
            aug_rows[i][ncols] = val
    reduced, pivots = _rref(aug_rows, ncols + 1)
    pivot_set = set(pivots)
    kernel = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [_ZERO] * ncols
        v[free] = _ONE
        for row, p in zip(reduced, pivots):
            if p >= ncols:
                continue
            coeff = row.get(free)
            if coeff is not None:
                v[p] = -coeff
        kernel.append(tuple(v))
    if ncols in pivot_set:
        return None, kernel
    x = [_ZERO] * ncols
    for row, p in zip(reduced, pivots):
        x[p] = row.get(ncols, _ZERO)
    return tuple(x), kernel


def rank(m: Matrix) -> int:
    """Rank over the rationals."""
    _, pivots = _rref(_to_sparse_rows(m), m.cols)
    return len(pivots)


def pivot_columns(m: Matrix) -> list[int]:
    """Pivot columns of the reduced echelon form, ascending."""
    _, pivots = _rref(_to_sparse_rows(m), m.cols)
    return pivots


def column_space_basis(m: Matrix) -> Matrix:
    """The pivot columns of m itself: an exact basis of the column space."""
    return Matrix.from_columns([m.col(j) for j in pivot_columns(m)], rows=m.rows)


def kernel_basis(m: Matrix) -> list[Vector]:
    """Basis of the right kernel {v : m v = 0}, pivot-normalized.

    Each basis vector carries a 1 in its free coordinate, 0 in the other free
    coordinates, and the negated reduced-echelon entries in the pivot
    coordinates; vectors are ordered by free column.  Basis size equals
    cols - rank.
    """
    return sparse_kernel(_to_sparse_rows(m), m.cols)


def solve(m: Matrix, b: Sequence[RationalLike]) -> Vector | None:
    """A particular solution of m x = b, or None when inconsistent.

    Free variables are set to zero, so the answer is deterministic.
    """
    if len(b) != m.rows:
        raise ValueError(f"right-hand side has {len(b)} entries, matrix has {m.rows} rows")
    bb = vector(b)
    rows = _to_sparse_rows(m)
    aug = m.cols
    for i, val in enumerate(bb):
        if val != 0:
            rows[i][aug] = val
    reduced, pivots = _rref(rows, aug + 1)
    if aug in pivots:
        return None
    x = [_ZERO] * m.cols
    for row, p in zip(reduced, pivots):
        x[p] = row.get(aug, _ZERO)
    return tuple(x)


def solve_multi(m: Matrix, rhs: Matrix) -> Matrix | None:
    """Solve m X = rhs for all right-hand columns at once.

    Returns a cols(m) x cols(rhs) matrix with free variables set to zero, or
    None if any column is inconsistent.
    """
    if rhs.rows != m.rows:
        raise ValueError(f"right-hand side has {rhs.rows} rows, matrix has {m.rows}")
    rows = _to_sparse_rows(m)
    base = m.cols
    for i in range(m.rows):
        for j, v in enumerate(rhs.row(i)):
            if v != 0:
                rows[i][base + j] = v
    reduced, pivots = _rref(rows, base + rhs.cols)
    if any(p >= base for p in pivots):
        return None
    out = [[_ZERO] * rhs.cols for _ in range(m.cols)]
    for row, p in zip(reduced, pivots):
        for c, v in row.items():
            if c >= base:
                out[p][c - base] = v
    return Matrix.from_rows(out, cols=rhs.cols)


def trace(m: Matrix) -> Fraction:
    """Sum of diagonal entries; raises on non-square input."""
    if m.rows != m.cols:
        raise ValueError(f"trace of non-square {m.rows}x{m.cols} matrix")
    return sum((m[i, i] for i in range(m.rows)), _ZERO)


def is_invertible(m: Matrix) -> bool:
    return m.rows == m.cols and rank(m) == m.rows


def inverse(m: Matrix) -> Matrix | None:
    """Exact inverse of a square matrix, or None if singular."""
    if m.rows != m.cols:
        raise ValueError(f"inverse of non-square {m.rows}x{m.cols} matrix")
    sol = solve_multi(m, Matrix.identity(m.rows))
    if sol is None or rank(m) != m.rows:
        return None
    return sol


def hstack(blocks: Sequence[Matrix]) -> Matrix:
    if not blocks:
        raise ValueError("hstack of no blocks")
    nrows = blocks[0].rows
    if any(b.rows != nrows for b in blocks):
        raise ValueError("hstack with mismatched row counts")
    rows = []
    for i in range(nrows):
        row: list[Fraction] = []
        for b in blocks:
            row.extend(b.row(i))
        rows.append(row)
    return Matrix.from_rows(rows, cols=sum(b.cols for b in blocks))


def vstack(blocks: Sequence[Matrix]) -> Matrix:
    if not blocks:
        raise ValueError("vstack of no blocks")
    ncols = blocks[0].cols
    if any(b.cols != ncols for b in blocks):
        raise ValueError("vstack with mismatched column counts")
    rows = []
    for b in blocks:
        for i in range(b.rows):
            rows.append(list(b.row(i)))
    return Matrix.from_rows(rows, cols=ncols)


def block_diag(blocks: Sequence[Matrix]) -> Matrix:
    nrows = sum(b.rows for b in blocks)
    ncols = sum(b.cols for b in blocks)
    out = [[_ZERO] * ncols for _ in range(nrows)]
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.rows):
            row = b.row(i)
            for j in range(b.cols):
                if row[j] != 0:
                    out[r0 + i][c0 + j] = row[j]
        r0 += b.rows
        c0 += b.cols
    return Matrix.from_rows(out, cols=ncols)
