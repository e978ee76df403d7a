import random
from fractions import Fraction

import pytest

from charvar.scalars import Scalar
from charvar.linalg import Mat
from charvar.groups import UnsupportedFamilyError
from charvar.words import free_group, surface_presentation
from charvar.representation import Representation, validate
from charvar.cohomology import z1_basis
from charvar.scheme import (Polynomial, PointNotOnVarietyError, build_system,
                            jacobian_at, jacobian_rank_at, representation_point,
                            tangent_dim_at)

from conftest import (CYCLE_3, DIAG_3, GL2, SL2, SL3, SO3, UNIPOTENT_A, UNIPOTENT_B,
                      random_scalar)

S = Scalar.of


def trivial_rep(presentation, family):
    ident = Mat.identity(family.n)
    return Representation(presentation, family,
                          tuple(ident for _ in range(presentation.n_generators)))


def test_build_system_counts():
    z2 = surface_presentation(1)
    sys_z2 = build_system(z2, SL2)
    assert sys_z2.n_variables == 8
    assert len(sys_z2.equations) == 2 + 4
    assert sys_z2.det_equation_count == 2

    f2 = free_group(["x", "y"])
    sys_f2 = build_system(f2, SL2)
    assert sys_f2.n_variables == 8
    assert len(sys_f2.equations) == 2

    g2 = surface_presentation(2)
    sys_g2 = build_system(g2, SL2)
    assert sys_g2.n_variables == 16
    assert len(sys_g2.equations) == 4 + 4

    sys_gl = build_system(z2, GL2)
    assert sys_gl.n_variables == 10
    assert len(sys_gl.equations) == 2 + 4
    assert sys_gl.variable_names[-2:] == ("d1", "d2")


def test_build_system_rejects_so_sp():
    with pytest.raises(UnsupportedFamilyError):
        build_system(free_group(["x"]), SO3)


def test_determinant_equation_rendering():
    sys_f2 = build_system(free_group(["x", "y"]), SL2)
    lines = sys_f2.render_equations()
    assert lines[0] == "x1*x4 - x2*x3 - 1 = 0"
    assert lines[1] == "x5*x8 - x6*x7 - 1 = 0"


def test_equations_vanish_at_valid_representations(genus2_sl2):
    system = build_system(genus2_sl2.presentation, SL2)
    point = representation_point(system, genus2_sl2)
    for eq in system.equations:
        assert eq.evaluate(point).is_zero()


def test_torus_jacobian_rank_at_trivial(z2_trivial_sl2):
    system = build_system(z2_trivial_sl2.presentation, SL2)
    point = representation_point(system, z2_trivial_sl2)
    assert point == tuple(S(x) for x in (1, 0, 0, 1, 1, 0, 0, 1))
    assert jacobian_rank_at(system, point) == 2
    assert tangent_dim_at(system, point) == 6


def test_torus_jacobian_rows_at_trivial(z2_trivial_sl2):
    # Adjugate-based inverses make the relator word equal
    # det(X)det(Y) * X Y X^-1 Y^-1, so at the pair of identities the
    # diagonal relator rows reduce to the sum of the determinant gradients
    # and the off-diagonal rows vanish; the rank stays 2.
    system = build_system(z2_trivial_sl2.presentation, SL2)
    point = representation_point(system, z2_trivial_sl2)
    jac = jacobian_at(system, point)
    det_x = tuple(S(x) for x in (1, 0, 0, 1, 0, 0, 0, 0))
    det_y = tuple(S(x) for x in (0, 0, 0, 0, 1, 0, 0, 1))
    both = tuple(a + b for a, b in zip(det_x, det_y))
    assert jac.row(0) == det_x
    assert jac.row(1) == det_y
    assert jac.row(2) == both and jac.row(5) == both  # diagonal entries
    assert all(x.is_zero() for x in jac.row(3))
    assert all(x.is_zero() for x in jac.row(4))


def test_free_group_rank_is_det_gradients(f2_sl2):
    system = build_system(f2_sl2.presentation, SL2)
    point = representation_point(system, f2_sl2)
    assert jacobian_rank_at(system, point) == 2
    assert tangent_dim_at(system, point) == 6


def test_genus2_tangent(genus2_sl2):
    system = build_system(genus2_sl2.presentation, SL2)
    point = representation_point(system, genus2_sl2)
    assert jacobian_rank_at(system, point) == 16 - 9
    assert tangent_dim_at(system, point) == 9


def test_point_off_variety_rejected():
    system = build_system(free_group(["x"]), SL2)
    with pytest.raises(PointNotOnVarietyError):
        jacobian_rank_at(system, tuple(S(x) for x in (2, 0, 0, 1)))


def tangent_equals_z1(rho):
    system = build_system(rho.presentation, rho.family)
    point = representation_point(system, rho)
    return tangent_dim_at(system, point), len(z1_basis(rho))


def test_tangent_matches_z1_suite(f2_sl2, genus2_sl2, z2_trivial_sl2):
    ident2 = Mat.identity(2)
    ident3 = Mat.identity(3)
    a, b = UNIPOTENT_A, UNIPOTENT_B
    d1 = Mat.from_rows([[S(2), S(0)], [S(0), S(Fraction(1, 2))]])
    d2 = Mat.from_rows([[S(3), S(0)], [S(0), S(Fraction(1, 3))]])
    f2 = free_group(["x", "y"])
    z2 = surface_presentation(1)
    g2 = surface_presentation(2)
    suite = [
        f2_sl2,
        trivial_rep(f2, SL2),
        Representation(f2, SL2, (a, a)),
        Representation(f2, SL3, (CYCLE_3, DIAG_3)),
        trivial_rep(f2, SL3),
        z2_trivial_sl2,
        Representation(z2, SL2, (d1, d2)),
        Representation(z2, SL2, (a, a)),
        Representation(z2, SL3, (DIAG_3, DIAG_3)),
        genus2_sl2,
        trivial_rep(g2, SL2),
        Representation(g2, SL2, (a, ident2, b, ident2)),
        Representation(f2, GL2, (a.scale(S(2)), b)),
        Representation(z2, GL2, (d1.scale(S(3)), d2)),
    ]
    for rho in suite:
        assert validate(rho) == []
        tangent, z1 = tangent_equals_z1(rho)
        assert tangent == z1


def test_gl_reciprocal_variable_contributions(z2_trivial_sl2):
    system = build_system(surface_presentation(1), GL2)
    rho = Representation(surface_presentation(1), GL2,
                         (Mat.identity(2), Mat.identity(2)))
    point = representation_point(system, rho)
    assert point[-2:] == (S(1), S(1))
    assert tangent_dim_at(system, point) == 8
    assert len(z1_basis(rho)) == 8


def random_polynomial(rng, n_vars=3, n_terms=4, max_exp=2):
    terms = {}
    for _ in range(n_terms):
        mono = tuple(sorted(
            (v, rng.randint(1, max_exp))
            for v in rng.sample(range(n_vars), rng.randint(0, n_vars))))
        terms[mono] = random_scalar(rng)
    return Polynomial(terms)


def test_polynomial_diff_is_linear_and_leibniz():
    rng = random.Random(61)
    for _ in range(40):
        p = random_polynomial(rng)
        q = random_polynomial(rng)
        for var in range(3):
            left = (p * q).diff(var)
            right = p.diff(var) * q + p * q.diff(var)
            assert (left - right).is_zero()
            lin = (p + q).diff(var) - (p.diff(var) + q.diff(var))
            assert lin.is_zero()


def test_polynomial_gradient_matches_diff_then_evaluate():
    rng = random.Random(67)
    for _ in range(25):
        p = random_polynomial(rng)
        point = tuple(random_scalar(rng) for _ in range(3))
        grad = p.gradient_at(point, 3)
        for var in range(3):
            assert grad[var] == p.diff(var).evaluate(point)


def test_polynomial_evaluation_agrees_with_expansion():
    # (x0 + x1)^2 expanded by the product must evaluate like the closed form.
    x0, x1 = Polynomial.variable(0), Polynomial.variable(1)
    p = (x0 + x1) * (x0 + x1)
    rng = random.Random(71)
    for _ in range(20):
        a, b = random_scalar(rng), random_scalar(rng)
        want = (a + b) * (a + b)
        assert p.evaluate((a, b)) == want
