"""Classical matrix group families over Q(i): GL, SL, SO, Sp.

Provides exact membership tests, explicit Lie algebra bases, the adjoint
action in those bases, the trace form, and center dimensions.  The
symplectic family uses the anti-diagonal form J with entries 1,...,1 then
-1,...,-1 read down the anti-diagonal.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple

from .linalg import Mat, det, inverse, kernel_basis, rank, solve
from .scalars import ONE, Scalar, ZERO

KINDS = ("GL", "SL", "SO", "Sp")


class UnsupportedFamilyError(ValueError):
    pass


class NonMemberError(ValueError):
    pass


@dataclass(frozen=True)
class GroupFamily:
    kind: str
    n: int

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise UnsupportedFamilyError(f"unknown family kind {self.kind!r}")
        if self.n < 1:
            raise ValueError("matrix size must be positive")
        if self.kind == "Sp" and self.n % 2 != 0:
            raise ValueError("Sp requires even matrix size")

    def __str__(self) -> str:
        return f"{self.kind} {self.n}"

    @property
    def dim(self) -> int:
        n = self.n
        if self.kind == "GL":
            return n * n
        if self.kind == "SL":
            return n * n - 1
        if self.kind == "SO":
            return n * (n - 1) // 2
        return n * (n + 1) // 2  # Sp, n = matrix size


def parse_family(text: str) -> GroupFamily:
    parts = text.split()
    if len(parts) != 2:
        raise ValueError(f"bad family literal {text!r}, expected e.g. 'SL 2'")
    kind, n_text = parts
    try:
        n = int(n_text)
    except ValueError:
        raise ValueError(f"bad family size {n_text!r}") from None
    return GroupFamily(kind, n)


def _unit(i: int, j: int, n: int) -> Mat:
    return Mat(n, n, tuple(ONE if (r, c) == (i, j) else ZERO
                           for r in range(n) for c in range(n)))


@lru_cache(maxsize=None)
def symplectic_form(n: int) -> Mat:
    """Anti-diagonal J: entry (i, n-1-i) is 1 for i < n/2 and -1 after."""
    if n % 2 != 0:
        raise ValueError("symplectic form needs even size")
    entries = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        entries[i][n - 1 - i] = ONE if i < n // 2 else -ONE
    return Mat.from_rows(entries)


def is_orthogonal(m: Mat) -> bool:
    """The O(n) flavor: A*A^T = I with no determinant condition."""
    return m.rows == m.cols and (m * m.transpose()).is_identity()


def membership(family: GroupFamily, m: Mat) -> bool:
    if m.rows != family.n or m.cols != family.n:
        raise ValueError(f"expected a {family.n}x{family.n} matrix")
    if family.kind == "GL":
        return not det(m).is_zero()
    if family.kind == "SL":
        return det(m) == ONE
    if family.kind == "SO":
        return is_orthogonal(m) and det(m) == ONE
    j = symplectic_form(family.n)
    return m * j * m.transpose() == j


@dataclass(frozen=True)
class LieAlgebra:
    family: GroupFamily
    basis: Tuple[Mat, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def element(self, coords) -> Mat:
        """The matrix with the given coordinates in this basis."""
        if len(coords) != self.dim:
            raise ValueError("coordinate length does not match dimension")
        n = self.family.n
        acc = Mat.zeros(n, n)
        for c, b in zip(coords, self.basis):
            if not c.is_zero():
                acc = acc + b.scale(c)
        return acc

    def coordinates(self, m: Mat) -> Tuple[Scalar, ...]:
        """Coordinates of a Lie algebra member; raises if m is outside."""
        flat = Mat(self.family.n ** 2, self.dim,
                   tuple(b.entries[k] for k in range(self.family.n ** 2) for b in self.basis))
        x = solve(flat, m.flatten())
        if x is None:
            raise NonMemberError("matrix is not in the Lie algebra span")
        return x


@lru_cache(maxsize=None)
def lie_algebra(family: GroupFamily) -> LieAlgebra:
    n = family.n
    basis: List[Mat] = []
    if family.kind == "GL":
        for i in range(n):
            for j in range(n):
                basis.append(_unit(i, j, n))
    elif family.kind == "SL":
        for i in range(n):
            for j in range(n):
                if i != j:
                    basis.append(_unit(i, j, n))
        for k in range(n - 1):
            basis.append(_unit(k, k, n) - _unit(k + 1, k + 1, n))
    elif family.kind == "SO":
        for i in range(n):
            for j in range(i + 1, n):
                basis.append(_unit(i, j, n) - _unit(j, i, n))
    else:  # Sp: kernel of X -> X*J + J*X^T, linearized symplectic condition
        j = symplectic_form(n)
        rows = []
        for r in range(n):
            for c in range(n):
                row = []
                for a in range(n):
                    for b in range(n):
                        e = _unit(a, b, n)
                        v = e * j + j * e.transpose()
                        row.append(v.at(r, c))
                rows.append(row)
        cond = Mat.from_rows(rows)
        for vec in kernel_basis(cond):
            basis.append(Mat(n, n, tuple(vec)))
    alg = LieAlgebra(family, tuple(basis))
    assert alg.dim == family.dim
    return alg


def adjoint_matrix(family: GroupFamily, g: Mat) -> Mat:
    """Matrix of X -> g X g^(-1) in the family's Lie algebra basis."""
    if not membership(family, g):
        raise NonMemberError(f"matrix is not a member of {family}")
    alg = lie_algebra(family)
    g_inv = inverse(g)
    cols = [alg.coordinates(g * b * g_inv) for b in alg.basis]
    d = alg.dim
    return Mat(d, d, tuple(cols[c][r] for r in range(d) for c in range(d)))


@dataclass(frozen=True)
class BilinearForm:
    """Symmetric non-degenerate gram matrix over a Lie algebra basis."""

    family: GroupFamily
    gram: Mat

    def __post_init__(self) -> None:
        d = self.family.dim
        if (self.gram.rows, self.gram.cols) != (d, d):
            raise ValueError("gram size does not match the Lie algebra dimension")
        if self.gram != self.gram.transpose():
            raise ValueError("gram matrix must be symmetric")
        if rank(self.gram) != d:
            raise ValueError("gram matrix must be non-degenerate")

    def ad_invariant_on(self, elements) -> bool:
        for g in elements:
            ad = adjoint_matrix(self.family, g)
            if ad.transpose() * self.gram * ad != self.gram:
                return False
        return True


@lru_cache(maxsize=None)
def trace_form(family: GroupFamily) -> BilinearForm:
    """gram(X, Y) = trace(X*Y) on the Lie algebra basis."""
    alg = lie_algebra(family)
    d = alg.dim
    entries = []
    for i in range(d):
        for j in range(d):
            entries.append((alg.basis[i] * alg.basis[j]).trace())
    return BilinearForm(family, Mat(d, d, tuple(entries)))


def center_dim(family: GroupFamily) -> int:
    return 1 if family.kind == "GL" else 0
