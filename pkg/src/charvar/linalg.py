"""Exact dense linear algebra over the Gaussian rationals.

Rank, kernel, solve, determinant and inverse all run Gaussian elimination
with partial pivoting on exact zero tests; entries are ``Scalar`` values, so
no precision is ever lost.  Matrices are immutable and safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .scalars import DUAL_ZERO, DualScalar, ONE, Scalar, ZERO

Vector = Tuple[Scalar, ...]


class SingularMatrixError(ValueError):
    pass


@dataclass(frozen=True)
class Mat:
    rows: int
    cols: int
    entries: Tuple[Scalar, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match shape")

    @staticmethod
    def from_rows(rows: Sequence[Sequence[Scalar]]) -> "Mat":
        r = len(rows)
        c = len(rows[0]) if r else 0
        for row in rows:
            if len(row) != c:
                raise ValueError("ragged rows")
        return Mat(r, c, tuple(x for row in rows for x in row))

    @staticmethod
    def from_int_rows(rows: Sequence[Sequence[int]]) -> "Mat":
        return Mat.from_rows([[Scalar.of(x) for x in row] for row in rows])

    @staticmethod
    def identity(n: int) -> "Mat":
        return Mat(n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))

    @staticmethod
    def zeros(rows: int, cols: int) -> "Mat":
        return Mat(rows, cols, (ZERO,) * (rows * cols))

    def at(self, i: int, j: int) -> Scalar:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def row_lists(self) -> List[List[Scalar]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "Mat":
        return Mat(self.cols, self.rows,
                   tuple(self.at(i, j) for j in range(self.cols) for i in range(self.rows)))

    def trace(self) -> Scalar:
        if self.rows != self.cols:
            raise ValueError("trace of non-square matrix")
        t = ZERO
        for i in range(self.rows):
            t = t + self.at(i, i)
        return t

    def scale(self, c: Scalar) -> "Mat":
        return Mat(self.rows, self.cols, tuple(c * x for x in self.entries))

    def __add__(self, other: "Mat") -> "Mat":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Mat(self.rows, self.cols,
                   tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Mat") -> "Mat":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Mat(self.rows, self.cols,
                   tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "Mat":
        return Mat(self.rows, self.cols, tuple(-x for x in self.entries))

    def __mul__(self, other: "Mat") -> "Mat":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out: List[Scalar] = []
        for i in range(self.rows):
            for j in range(other.cols):
                acc = ZERO
                for k in range(self.cols):
                    acc = acc + self.at(i, k) * other.at(k, j)
                out.append(acc)
        return Mat(self.rows, other.cols, tuple(out))

    def is_zero(self) -> bool:
        return all(x.is_zero() for x in self.entries)

    def is_identity(self) -> bool:
        return self.rows == self.cols and self == Mat.identity(self.rows)

    def identity_like(self) -> "Mat":
        return Mat.identity(self.rows)

    def inverse(self) -> "Mat":
        return inverse(self)

    def flatten(self) -> Vector:
        return self.entries

    def __str__(self) -> str:
        return format_matrix(self)


def format_matrix(m: Mat) -> str:
    rows = ",".join(
        "[" + ",".join(str(m.at(i, j)) for j in range(m.cols)) + "]"
        for i in range(m.rows)
    )
    return "[" + rows + "]"


def _rref(rows: List[List[Scalar]]) -> Tuple[List[List[Scalar]], List[int]]:
    """Reduced row echelon form in place; returns (rows, pivot columns)."""
    if not rows:
        return rows, []
    n_rows, n_cols = len(rows), len(rows[0])
    pivots: List[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        pivot_row = None
        for i in range(r, n_rows):
            if not rows[i][c].is_zero():
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = ONE / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(n_rows):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def rank(m: Mat) -> int:
    _, pivots = _rref(m.row_lists())
    return len(pivots)


def kernel_basis(m: Mat) -> List[Vector]:
    """Exact basis of the right null space, one vector per free column."""
    rows, pivots = _rref(m.row_lists())
    pivot_set = set(pivots)
    basis: List[Vector] = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [ZERO] * m.cols
        v[free] = ONE
        for r, p in enumerate(pivots):
            v[p] = -rows[r][free]
        basis.append(tuple(v))
    return basis


def solve(m: Mat, rhs: Sequence[Scalar]) -> Optional[Vector]:
    """One exact solution of m*x = rhs, or None if inconsistent."""
    if len(rhs) != m.rows:
        raise ValueError("rhs length does not match row count")
    aug = [list(m.row(i)) + [rhs[i]] for i in range(m.rows)]
    rows, pivots = _rref(aug)
    if m.cols in pivots:
        return None
    x = [ZERO] * m.cols
    for r, p in enumerate(pivots):
        x[p] = rows[r][m.cols]
    return tuple(x)


def det(m: Mat) -> Scalar:
    if m.rows != m.cols:
        raise ValueError("determinant of non-square matrix")
    rows = m.row_lists()
    n = m.rows
    result = ONE
    for c in range(n):
        pivot_row = None
        for i in range(c, n):
            if not rows[i][c].is_zero():
                pivot_row = i
                break
        if pivot_row is None:
            return ZERO
        if pivot_row != c:
            rows[c], rows[pivot_row] = rows[pivot_row], rows[c]
            result = -result
        result = result * rows[c][c]
        inv = ONE / rows[c][c]
        for i in range(c + 1, n):
            if not rows[i][c].is_zero():
                f = rows[i][c] * inv
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
    return result


def inverse(m: Mat) -> Mat:
    if m.rows != m.cols:
        raise ValueError("inverse of non-square matrix")
    n = m.rows
    ident = Mat.identity(n)
    aug = [list(m.row(i)) + list(ident.row(i)) for i in range(n)]
    rows, pivots = _rref(aug)
    if len(pivots) < n or pivots[-1] >= n:
        raise SingularMatrixError("matrix is singular")
    return Mat(n, n, tuple(rows[i][n + j] for i in range(n) for j in range(n)))


# Vector helpers -------------------------------------------------------------

def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def vec_add(a: Sequence[Scalar], b: Sequence[Scalar]) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a: Sequence[Scalar], b: Sequence[Scalar]) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def vec_neg(a: Sequence[Scalar]) -> Vector:
    return tuple(-x for x in a)


def vec_scale(c: Scalar, a: Sequence[Scalar]) -> Vector:
    return tuple(c * x for x in a)


def vec_is_zero(a: Sequence[Scalar]) -> bool:
    return all(x.is_zero() for x in a)


def mat_vec(m: Mat, v: Sequence[Scalar]) -> Vector:
    if len(v) != m.cols:
        raise ValueError("vector length does not match column count")
    out = []
    for i in range(m.rows):
        acc = ZERO
        for j in range(m.cols):
            acc = acc + m.at(i, j) * v[j]
        out.append(acc)
    return tuple(out)


def bilinear(gram: Mat, u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
    acc = ZERO
    for i, ui in enumerate(u):
        if ui.is_zero():
            continue
        row = gram.row(i)
        for j, vj in enumerate(v):
            if not vj.is_zero():
                acc = acc + ui * row[j] * vj
    return acc


class SpanTracker:
    """Incremental echelon basis for rank-growth tests over exact vectors."""

    def __init__(self, length: int):
        self.length = length
        self._rows: List[Tuple[int, List[Scalar]]] = []  # (pivot index, row)

    @property
    def dim(self) -> int:
        return len(self._rows)

    def residual(self, v: Sequence[Scalar]) -> List[Scalar]:
        w = list(v)
        for p, row in self._rows:
            if not w[p].is_zero():
                f = w[p]
                w = [a - f * b for a, b in zip(w, row)]
        return w

    def contains(self, v: Sequence[Scalar]) -> bool:
        return vec_is_zero(self.residual(v))

    def add(self, v: Sequence[Scalar]) -> bool:
        """Insert v if independent of the current span; True if rank grew."""
        w = self.residual(v)
        for p in range(self.length):
            if not w[p].is_zero():
                inv = ONE / w[p]
                row = [x * inv for x in w]
                self._rows.append((p, row))
                self._rows.sort(key=lambda t: t[0])
                return True
        return False


def column_space_basis(m: Mat) -> List[Vector]:
    """The independent columns of m, first-come-first-kept."""
    tracker = SpanTracker(m.rows)
    basis: List[Vector] = []
    for j in range(m.cols):
        col = m.col(j)
        if tracker.add(col):
            basis.append(col)
    return basis


# Dual-number matrices -------------------------------------------------------

@dataclass(frozen=True)
class DualMat:
    """Matrix with DualScalar entries; inverses need an invertible value part."""

    rows: int
    cols: int
    entries: Tuple[DualScalar, ...]

    @staticmethod
    def from_parts(value: Mat, eps: Mat) -> "DualMat":
        if (value.rows, value.cols) != (eps.rows, eps.cols):
            raise ValueError("shape mismatch")
        return DualMat(value.rows, value.cols,
                       tuple(DualScalar(a, b) for a, b in zip(value.entries, eps.entries)))

    @staticmethod
    def identity(n: int) -> "DualMat":
        return DualMat.from_parts(Mat.identity(n), Mat.zeros(n, n))

    def at(self, i: int, j: int) -> DualScalar:
        return self.entries[i * self.cols + j]

    def value_part(self) -> Mat:
        return Mat(self.rows, self.cols, tuple(e.value for e in self.entries))

    def eps_part(self) -> Mat:
        return Mat(self.rows, self.cols, tuple(e.eps for e in self.entries))

    def identity_like(self) -> "DualMat":
        return DualMat.identity(self.rows)

    def __mul__(self, other: "DualMat") -> "DualMat":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out: List[DualScalar] = []
        for i in range(self.rows):
            for j in range(other.cols):
                acc = DUAL_ZERO
                for k in range(self.cols):
                    acc = acc + self.at(i, k) * other.at(k, j)
                out.append(acc)
        return DualMat(self.rows, other.cols, tuple(out))

    def inverse(self) -> "DualMat":
        # (A + B*eps)^(-1) = A^(-1) - A^(-1) B A^(-1) eps, using eps^2 = 0.
        a_inv = inverse(self.value_part())
        return DualMat.from_parts(a_inv, -(a_inv * self.eps_part() * a_inv))
