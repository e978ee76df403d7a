"""Polynomial equations of the representation scheme for SL(n)/GL(n) targets.

One symbolic n x n matrix of variables per generator; SL contributes a
determinant-equals-one equation per generator, GL an extra reciprocal
variable d with d*det = 1.  Relator words are multiplied out with
adjugate-based inverses (times d for GL), so no division ever appears, and
each relator contributes its n^2 entry equations.  Redundant generators of
the ideal are kept: rank at a point does not depend on them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .groups import GroupFamily, UnsupportedFamilyError
from .linalg import Mat, det, rank
from .scalars import ONE, Scalar, ZERO, format_scalar
from .words import GroupPresentation
from .representation import Representation

Monomial = Tuple[Tuple[int, int], ...]  # sorted ((variable index, exponent), ...)


class Polynomial:
    """Sparse multivariate polynomial over Q(i); immutable by convention."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[Monomial, Scalar]):
        self.terms = {m: c for m, c in terms.items() if not c.is_zero()}

    @staticmethod
    def constant(c: Scalar) -> "Polynomial":
        return Polynomial({(): c})

    @staticmethod
    def variable(index: int) -> "Polynomial":
        return Polynomial({((index, 1),): ONE})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "Polynomial") -> "Polynomial":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, ZERO) + c
        return Polynomial(out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, ZERO) - c
        return Polynomial(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial({m: -c for m, c in self.terms.items()})

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        out: Dict[Monomial, Scalar] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _merge_monomials(m1, m2)
                c = c1 * c2
                if m in out:
                    out[m] = out[m] + c
                else:
                    out[m] = c
        return Polynomial(out)

    def scale(self, c: Scalar) -> "Polynomial":
        return Polynomial({m: c * x for m, x in self.terms.items()})

    def diff(self, var: int) -> "Polynomial":
        out: Dict[Monomial, Scalar] = {}
        for mono, coeff in self.terms.items():
            for k, (v, e) in enumerate(mono):
                if v == var:
                    if e == 1:
                        new = mono[:k] + mono[k + 1 :]
                    else:
                        new = mono[:k] + ((v, e - 1),) + mono[k + 1 :]
                    c = coeff * Scalar.of(e)
                    out[new] = out.get(new, ZERO) + c
                    break
        return Polynomial(out)

    def gradient_at(self, point: Sequence[Scalar], n_vars: int) -> List[Scalar]:
        """All partial derivatives evaluated at the point, in one sweep."""
        grad = [ZERO] * n_vars
        for mono, coeff in self.terms.items():
            for k, (v, e) in enumerate(mono):
                rest = coeff * Scalar.of(e)
                for kk, (vv, ee) in enumerate(mono):
                    p = ee - 1 if kk == k else ee
                    for _ in range(p):
                        rest = rest * point[vv]
                grad[v] = grad[v] + rest
        return grad

    def evaluate(self, point: Sequence[Scalar]) -> Scalar:
        acc = ZERO
        for mono, coeff in self.terms.items():
            term = coeff
            for v, e in mono:
                for _ in range(e):
                    term = term * point[v]
            acc = acc + term
        return acc

    def degree(self) -> int:
        return max((sum(e for _, e in m) for m in self.terms), default=0)

    def render(self, names: Sequence[str]) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for mono in sorted(self.terms, key=lambda m: (-sum(e for _, e in m), m)):
            coeff = self.terms[mono]
            factors = "*".join(
                names[v] if e == 1 else f"{names[v]}^{e}" for v, e in mono)
            lit = format_scalar(coeff)
            if not factors:
                text = lit
            elif lit == "1":
                text = factors
            elif lit == "-1":
                text = f"-{factors}"
            elif "+" in lit[1:] or "-" in lit[1:]:
                text = f"({lit})*{factors}"
            else:
                text = f"{lit}*{factors}"
            pieces.append(text)
        out = pieces[0]
        for p in pieces[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


def _merge_monomials(a: Monomial, b: Monomial) -> Monomial:
    out: List[Tuple[int, int]] = []
    i = j = 0
    while i < len(a) and j < len(b):
        va, ea = a[i]
        vb, eb = b[j]
        if va == vb:
            out.append((va, ea + eb))
            i += 1
            j += 1
        elif va < vb:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


POLY_ZERO = Polynomial({})
POLY_ONE = Polynomial.constant(ONE)


def _poly_mat_mul(a: List[List[Polynomial]], b: List[List[Polynomial]]) -> List[List[Polynomial]]:
    n = len(a)
    return [[_poly_sum([a[i][k] * b[k][j] for k in range(n)]) for j in range(n)]
            for i in range(n)]


def _poly_sum(ps: Sequence[Polynomial]) -> Polynomial:
    acc = POLY_ZERO
    for p in ps:
        acc = acc + p
    return acc


def _poly_det(m: List[List[Polynomial]]) -> Polynomial:
    n = len(m)
    if n == 1:
        return m[0][0]
    acc = POLY_ZERO
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        cof = m[0][j] * _poly_det(minor)
        acc = acc + cof if j % 2 == 0 else acc - cof
    return acc


def _poly_adjugate(m: List[List[Polynomial]]) -> List[List[Polynomial]]:
    n = len(m)
    if n == 1:
        return [[POLY_ONE]]
    adj = [[POLY_ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [[m[r][c] for c in range(n) if c != j] for r in range(n) if r != i]
            cof = _poly_det(minor)
            adj[j][i] = cof if (i + j) % 2 == 0 else -cof
    return adj


@dataclass(frozen=True)
class PolynomialSystem:
    family: GroupFamily
    presentation: GroupPresentation
    variable_names: Tuple[str, ...]
    equations: Tuple[Polynomial, ...]
    det_equation_count: int

    @property
    def n_variables(self) -> int:
        return len(self.variable_names)

    def render_equations(self) -> List[str]:
        return [f"{eq.render(self.variable_names)} = 0" for eq in self.equations]


def build_system(presentation: GroupPresentation, family: GroupFamily) -> PolynomialSystem:
    """Equations cutting out the representation space inside affine space."""
    if family.kind not in ("SL", "GL"):
        raise UnsupportedFamilyError(
            f"scheme equations are available for SL and GL targets only, not {family.kind}")
    n = family.n
    n_gens = presentation.n_generators
    names: List[str] = [f"x{t * n * n + i * n + j + 1}"
                        for t in range(n_gens) for i in range(n) for j in range(n)]
    d_index: Dict[int, int] = {}
    if family.kind == "GL":
        for t in range(n_gens):
            d_index[t] = len(names)
            names.append(f"d{t + 1}")

    gen_mats: List[List[List[Polynomial]]] = []
    for t in range(n_gens):
        gen_mats.append([[Polynomial.variable(t * n * n + i * n + j) for j in range(n)]
                         for i in range(n)])

    equations: List[Polynomial] = []
    for t in range(n_gens):
        d_poly = _poly_det(gen_mats[t])
        if family.kind == "SL":
            equations.append(d_poly - POLY_ONE)
        else:
            equations.append(Polynomial.variable(d_index[t]) * d_poly - POLY_ONE)
    det_count = len(equations)

    inverse_mats: Dict[int, List[List[Polynomial]]] = {}

    def inv_mat(t: int) -> List[List[Polynomial]]:
        if t not in inverse_mats:
            adj = _poly_adjugate(gen_mats[t])
            if family.kind == "GL":
                d_var = Polynomial.variable(d_index[t])
                adj = [[d_var * entry for entry in row] for row in adj]
            inverse_mats[t] = adj
        return inverse_mats[t]

    ident = [[POLY_ONE if i == j else POLY_ZERO for j in range(n)] for i in range(n)]
    for rel in presentation.relators:
        word_mat = ident
        for gen, sign in rel.letters:
            factor = gen_mats[gen] if sign == 1 else inv_mat(gen)
            word_mat = _poly_mat_mul(word_mat, factor)
        for i in range(n):
            for j in range(n):
                eq = word_mat[i][j] - (POLY_ONE if i == j else POLY_ZERO)
                equations.append(eq)

    return PolynomialSystem(family=family, presentation=presentation,
                            variable_names=tuple(names), equations=tuple(equations),
                            det_equation_count=det_count)


class PointNotOnVarietyError(ValueError):
    pass


def representation_point(system: PolynomialSystem, rho: Representation) -> Tuple[Scalar, ...]:
    """Coordinates of a representation: matrix entries generator-major,
    then, for GL, the reciprocal determinants."""
    if rho.presentation != system.presentation or rho.family != system.family:
        raise ValueError("representation does not match the system")
    point: List[Scalar] = []
    for m in rho.images:
        point.extend(m.entries)
    if system.family.kind == "GL":
        for m in rho.images:
            point.append(ONE / det(m))
    return tuple(point)


def _check_point(system: PolynomialSystem, point: Sequence[Scalar]) -> None:
    if len(point) != system.n_variables:
        raise ValueError("point length does not match the variable count")
    for k, eq in enumerate(system.equations):
        if not eq.evaluate(point).is_zero():
            raise PointNotOnVarietyError(f"equation {k + 1} does not vanish at the point")


def jacobian_at(system: PolynomialSystem, point: Sequence[Scalar]) -> Mat:
    _check_point(system, point)
    nv = system.n_variables
    rows = [eq.gradient_at(point, nv) for eq in system.equations]
    return Mat.from_rows(rows)


def jacobian_rank_at(system: PolynomialSystem, point: Sequence[Scalar]) -> int:
    return rank(jacobian_at(system, point))


def tangent_dim_at(system: PolynomialSystem, point: Sequence[Scalar]) -> int:
    return system.n_variables - jacobian_rank_at(system, point)
