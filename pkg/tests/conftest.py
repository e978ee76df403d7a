"""Shared fixtures: standard presentations, representations and exact
random group elements used across the suite."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from charvar.scalars import Scalar
from charvar.linalg import Mat
from charvar.groups import GroupFamily, adjoint_matrix, membership
from charvar.words import GroupPresentation, free_group, generator, surface_presentation
from charvar.representation import Representation

S = Scalar.of

# The standard unipotent pair: together they span M(2) with short words.
UNIPOTENT_A = Mat.from_int_rows([[1, 1], [0, 1]])
UNIPOTENT_B = Mat.from_int_rows([[1, 0], [1, 1]])

# An irreducible SL(3) pair: a cyclic permutation and a generic diagonal.
CYCLE_3 = Mat.from_int_rows([[0, 0, 1], [1, 0, 0], [0, 1, 0]])
DIAG_3 = Mat.from_rows([
    [S(2), S(0), S(0)],
    [S(0), S(1), S(0)],
    [S(0), S(0), S(Fraction(1, 2))],
])

SL2 = GroupFamily("SL", 2)
SL3 = GroupFamily("SL", 3)
GL2 = GroupFamily("GL", 2)
SO3 = GroupFamily("SO", 3)
SP4 = GroupFamily("Sp", 4)


def klein_presentation() -> GroupPresentation:
    x, y = generator(0), generator(1)
    return GroupPresentation(("x", "y"), (x * x, y * y, x * y * x * y))


def cyclic_presentation(order: int) -> GroupPresentation:
    w = generator(0)
    rel = w
    for _ in range(order - 1):
        rel = rel * w
    return GroupPresentation(("x",), (rel,))


@pytest.fixture
def f2_sl2() -> Representation:
    return Representation(free_group(["x", "y"]), SL2, (UNIPOTENT_A, UNIPOTENT_B))


@pytest.fixture
def genus2_sl2() -> Representation:
    return Representation(surface_presentation(2), SL2,
                          (UNIPOTENT_A, UNIPOTENT_B, UNIPOTENT_B, UNIPOTENT_A))


@pytest.fixture
def z2_trivial_sl2() -> Representation:
    ident = Mat.identity(2)
    return Representation(surface_presentation(1), SL2, (ident, ident))


@pytest.fixture
def klein_so3() -> Representation:
    x_img = Mat.from_int_rows([[1, 0, 0], [0, -1, 0], [0, 0, -1]])
    y_img = Mat.from_int_rows([[-1, 0, 0], [0, 1, 0], [0, 0, -1]])
    return Representation(klein_presentation(), SO3, (x_img, y_img))


def o2_type_sl3_pair() -> Representation:
    """Adjoint images of the two finite-order elements of the A*A^T = +/-I
    subgroup of SL(2)."""
    d = Mat.from_rows([[S(0, 1), S(0)], [S(0), S(0, -1)]])
    s = Mat.from_int_rows([[0, 1], [-1, 0]])
    return Representation(free_group(["u", "v"]), SL3,
                          (adjoint_matrix(SL2, d), adjoint_matrix(SL2, s)))


def o2_type_sl3_triple() -> Representation:
    """Same subgroup with a generic rotation added, so the span reaches the
    invariant-subspace bound 1 + 4 = 5."""
    d = Mat.from_rows([[S(0, 1), S(0)], [S(0), S(0, -1)]])
    s = Mat.from_int_rows([[0, 1], [-1, 0]])
    r = Mat.from_rows([[S(Fraction(3, 5)), S(Fraction(-4, 5))],
                       [S(Fraction(4, 5)), S(Fraction(3, 5))]])
    return Representation(free_group(["u", "v", "w"]), SL3,
                          (adjoint_matrix(SL2, r), adjoint_matrix(SL2, d),
                           adjoint_matrix(SL2, s)))


def _elementary_factors(family: GroupFamily) -> list:
    n = family.n
    ts = [Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(2)]
    factors = []
    if family.kind in ("GL", "SL"):
        for i in range(n):
            for j in range(n):
                if i != j:
                    for t in ts[:2]:
                        e = [[S(1) if r == c else S(0) for c in range(n)] for r in range(n)]
                        e[i][j] = S(t)
                        factors.append(Mat.from_rows(e))
        if family.kind == "GL":
            d = [[S(1) if r == c else S(0) for c in range(n)] for r in range(n)]
            d[0][0] = S(2)
            factors.append(Mat.from_rows(d))
    elif family.kind == "SO":
        for i in range(n):
            for j in range(i + 1, n):
                for t in (Fraction(1, 2), Fraction(1, 3)):
                    c = S((1 - t * t) / (1 + t * t))
                    s_ = S(2 * t / (1 + t * t))
                    rows = [[S(1) if r == cc else S(0) for cc in range(n)] for r in range(n)]
                    rows[i][i], rows[j][j] = c, c
                    rows[i][j], rows[j][i] = -s_, s_
                    factors.append(Mat.from_rows(rows))
    else:  # Sp
        half = n // 2
        diag = [[S(1) if r == c else S(0) for c in range(n)] for r in range(n)]
        diag[0][0] = S(2)
        diag[n - 1][n - 1] = S(Fraction(1, 2))
        factors.append(Mat.from_rows(diag))
        for t in (Fraction(1), Fraction(1, 2)):
            uni = [[S(1) if r == c else S(0) for c in range(n)] for r in range(n)]
            uni[0][n - 1] = S(t)
            factors.append(Mat.from_rows(uni))
        anti = [[S(0)] * n for _ in range(n)]
        for i in range(n):
            anti[i][n - 1 - i] = S(1) if i < half else S(-1)
        factors.append(Mat.from_rows(anti))
    for f in factors:
        assert membership(family, f)
    return factors


def random_member(family: GroupFamily, rng: random.Random, n_factors: int = 4) -> Mat:
    factors = _elementary_factors(family)
    m = Mat.identity(family.n)
    for _ in range(n_factors):
        m = m * rng.choice(factors)
    return m


def random_scalar(rng: random.Random) -> Scalar:
    return Scalar(Fraction(rng.randint(-4, 4), rng.randint(1, 3)),
                  Fraction(rng.randint(-4, 4), rng.randint(1, 3)))
