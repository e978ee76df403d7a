"""Analysis runs and deterministic report rendering.

Each run_* function takes a parsed problem and returns a typed result; the
render_* functions turn results into byte-stable text.  Human reports tag
every numeric line with the formula or computation it came from; machine
reports are bare ``key = value`` lines.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .groups import BilinearForm, center_dim, trace_form
from .problems import ProblemFile
from .representation import (IRREDUCIBLE, Representation, burnside_irreducible,
                             centralizer_dim, cr_irreducibility_criterion,
                             validate)
from .cohomology import (HomIncompatibleError, compose_representation, h1_summary,
                         pullback, z1_basis)
from .scheme import build_system, jacobian_rank_at, representation_point
from .symplectic import isotropy_check, omega_matrix
from .words import surface_genus

NOT_APPLICABLE = "not_applicable"


class ValidationFailure(ValueError):
    def __init__(self, violations: Sequence[str]):
        super().__init__("; ".join(violations))
        self.violations = list(violations)


class UnsupportedProblemError(ValueError):
    pass


def build_representation(problem: ProblemFile) -> Representation:
    return Representation(problem.presentation, problem.family, problem.images)


def require_valid_problem(problem: ProblemFile) -> Representation:
    rho = build_representation(problem)
    violations = validate(rho)
    if violations:
        raise ValidationFailure(violations)
    return rho


def resolve_form(problem: ProblemFile, rho: Representation) -> BilinearForm:
    """The trace form, or the user's gram matrix after it passes the
    symmetry, non-degeneracy and Ad-invariance checks."""
    if problem.form_gram is None:
        return trace_form(problem.family)
    try:
        form = BilinearForm(problem.family, problem.form_gram)
    except ValueError as exc:
        raise ValidationFailure([f"[form] gram rejected: {exc}"]) from None
    samples = list(rho.images)
    for a in rho.images:
        for b in rho.images:
            samples.append(a * b)
    if not form.ad_invariant_on(samples):
        raise ValidationFailure(
            ["[form] gram rejected: not Ad-invariant on the representation's image"])
    return form


def _presentation_kind(problem: ProblemFile) -> Tuple[str, Optional[int]]:
    genus = surface_genus(problem.presentation)
    if genus is not None:
        return "surface", genus
    if not problem.presentation.relators:
        return "free", None
    return "general", None


@dataclass(frozen=True)
class AnalyzeResult:
    family: str
    generator_count: int
    relator_count: int
    presentation_kind: str
    surface_genus: Optional[int]
    h0_dim: int
    center_dim: int
    orbit_dim: int
    burnside_verdict: str
    burnside_span: Optional[int]
    word_cap: int
    cr_verdict: str
    good_dimension_level: bool
    z1_dim: int
    b1_dim: int
    h1_dim: int
    rigid: bool
    z1_surface_formula: Optional[int]
    scheme_smooth_dimension_level: Optional[bool]
    h1_formula_if_good: Optional[int]


def run_analyze(problem: ProblemFile, word_cap: int = 6) -> AnalyzeResult:
    rho = require_valid_problem(problem)
    family = problem.family
    kind, genus = _presentation_kind(problem)
    central = centralizer_dim(rho)
    if family.kind in ("GL", "SL"):
        burnside = burnside_irreducible(rho, word_cap)
        burnside_verdict: str = burnside.verdict
        burnside_span: Optional[int] = burnside.span_dim
    else:
        burnside_verdict = NOT_APPLICABLE
        burnside_span = None
    cr_verdict = cr_irreducibility_criterion(rho)
    good = (central.h0_dim == central.center_dim
            and (burnside_verdict == IRREDUCIBLE or cr_verdict == IRREDUCIBLE))
    summary = h1_summary(rho)

    z1_formula: Optional[int] = None
    smooth: Optional[bool] = None
    h1_formula: Optional[int] = None
    c = center_dim(family)
    if kind == "surface" and genus is not None and genus >= 2:
        z1_formula = (2 * genus - 1) * family.dim + c
        smooth = summary.z1_dim == z1_formula
        h1_formula = (2 * genus - 2) * family.dim + 2 * c
    elif kind == "free":
        h1_formula = (problem.presentation.n_generators - 1) * family.dim + c

    return AnalyzeResult(
        family=str(family),
        generator_count=problem.presentation.n_generators,
        relator_count=len(problem.presentation.relators),
        presentation_kind=kind,
        surface_genus=genus,
        h0_dim=central.h0_dim,
        center_dim=central.center_dim,
        orbit_dim=central.orbit_dim,
        burnside_verdict=burnside_verdict,
        burnside_span=burnside_span,
        word_cap=word_cap,
        cr_verdict=cr_verdict,
        good_dimension_level=good,
        z1_dim=summary.z1_dim,
        b1_dim=summary.b1_dim,
        h1_dim=summary.h1_dim,
        rigid=summary.h1_dim == 0,
        z1_surface_formula=z1_formula,
        scheme_smooth_dimension_level=smooth,
        h1_formula_if_good=h1_formula,
    )


@dataclass(frozen=True)
class SchemeResult:
    family: str
    n_variables: int
    n_equations: int
    det_equations: int
    relator_equations: int
    jacobian_rank: int
    tangent_dim: int
    z1_dim: int
    cross_check_pass: bool
    equations: Tuple[str, ...]


def run_scheme(problem: ProblemFile) -> SchemeResult:
    if problem.family.kind not in ("SL", "GL"):
        raise UnsupportedProblemError(
            f"scheme equations are available for SL and GL targets only, "
            f"not {problem.family.kind}")
    rho = require_valid_problem(problem)
    system = build_system(problem.presentation, problem.family)
    point = representation_point(system, rho)
    j_rank = jacobian_rank_at(system, point)
    tangent = system.n_variables - j_rank
    z1 = len(z1_basis(rho))
    return SchemeResult(
        family=str(problem.family),
        n_variables=system.n_variables,
        n_equations=len(system.equations),
        det_equations=system.det_equation_count,
        relator_equations=len(system.equations) - system.det_equation_count,
        jacobian_rank=j_rank,
        tangent_dim=tangent,
        z1_dim=z1,
        cross_check_pass=tangent == z1,
        equations=tuple(system.render_equations()),
    )


@dataclass(frozen=True)
class LagrangianResult:
    family: str
    source_genus: int
    target_generators: int
    z1_target_dim: int
    h1_target_dim: int
    h1_boundary_dim: int
    image_dim: int
    half_h1: int
    isotropic: bool
    lagrangian: bool


def run_lagrangian(problem: ProblemFile) -> LagrangianResult:
    if problem.hom is None:
        raise UnsupportedProblemError("lagrangian analysis needs a [hom] section")
    genus = surface_genus(problem.hom.source)
    if genus is None:
        raise UnsupportedProblemError(
            "the [hom] source must be a canonical surface presentation")
    rho = require_valid_problem(problem)
    try:
        composed = compose_representation(problem.hom, rho)
    except HomIncompatibleError as exc:
        raise ValidationFailure([str(exc)]) from None
    form = resolve_form(problem, rho)
    target_summary = h1_summary(rho)
    cocycles = [pullback(problem.hom, rho, sigma) for sigma in target_summary.z1_basis]
    report = isotropy_check(cocycles, composed, form)
    return LagrangianResult(
        family=str(problem.family),
        source_genus=genus,
        target_generators=problem.presentation.n_generators,
        z1_target_dim=target_summary.z1_dim,
        h1_target_dim=target_summary.h1_dim,
        h1_boundary_dim=report.h1_dim,
        image_dim=report.dim,
        half_h1=report.h1_dim // 2,
        isotropic=report.isotropic,
        lagrangian=report.lagrangian,
    )


@dataclass(frozen=True)
class OmegaResult:
    family: str
    surface_genus: int
    h1_dim: int
    burnside_verdict: str
    cr_verdict: str
    label: str
    antisymmetric: bool
    omega_rank: int
    rows: Tuple[str, ...]


def run_omega(problem: ProblemFile, word_cap: int = 6) -> OmegaResult:
    genus = surface_genus(problem.presentation)
    if genus is None:
        raise UnsupportedProblemError(
            "the pairing needs a canonical surface presentation")
    rho = require_valid_problem(problem)
    form = resolve_form(problem, rho)
    if problem.family.kind in ("GL", "SL"):
        burnside_verdict = burnside_irreducible(rho, word_cap).verdict
    else:
        burnside_verdict = NOT_APPLICABLE
    cr_verdict = cr_irreducibility_criterion(rho)
    irreducible_evidence = burnside_verdict == IRREDUCIBLE or cr_verdict == IRREDUCIBLE
    if genus == 1:
        label = "pairing (possibly degenerate: genus 1)"
    elif irreducible_evidence:
        label = "symplectic (irreducible, genus >= 2)"
    else:
        label = "pairing (irreducibility unconfirmed)"
    omega = omega_matrix(rho, form)
    rows = tuple(
        "[" + ",".join(str(omega.gram.at(i, j)) for j in range(omega.gram.cols)) + "]"
        for i in range(omega.gram.rows))
    return OmegaResult(
        family=str(problem.family),
        surface_genus=genus,
        h1_dim=omega.h1_dim,
        burnside_verdict=burnside_verdict,
        cr_verdict=cr_verdict,
        label=label,
        antisymmetric=omega.is_antisymmetric(),
        omega_rank=omega.rank(),
        rows=rows,
    )


# Rendering ------------------------------------------------------------------

def _yes_no(flag: bool) -> str:
    return "yes" if flag else "no"


def _bool(flag: bool) -> str:
    return "true" if flag else "false"


def render_analyze(result: AnalyzeResult, machine: bool = False) -> str:
    if machine:
        pairs: List[Tuple[str, str]] = [
            ("family", result.family),
            ("generators", str(result.generator_count)),
            ("relators", str(result.relator_count)),
            ("presentation_kind", result.presentation_kind),
            ("h0_dim", str(result.h0_dim)),
            ("center_dim", str(result.center_dim)),
            ("orbit_dim", str(result.orbit_dim)),
            ("burnside_verdict", result.burnside_verdict),
            ("word_cap", str(result.word_cap)),
            ("cr_verdict", result.cr_verdict),
            ("good_dimension_level", _bool(result.good_dimension_level)),
            ("z1_dim", str(result.z1_dim)),
            ("b1_dim", str(result.b1_dim)),
            ("h1_dim", str(result.h1_dim)),
            ("rigid", _bool(result.rigid)),
        ]
        if result.burnside_span is not None:
            pairs.insert(8, ("burnside_span", str(result.burnside_span)))
        if result.surface_genus is not None:
            pairs.append(("surface_genus", str(result.surface_genus)))
        if result.z1_surface_formula is not None:
            pairs.append(("z1_surface_formula", str(result.z1_surface_formula)))
        if result.scheme_smooth_dimension_level is not None:
            pairs.append(("scheme_smooth_dimension_level",
                          _bool(result.scheme_smooth_dimension_level)))
        if result.h1_formula_if_good is not None:
            pairs.append(("h1_formula_if_good", str(result.h1_formula_if_good)))
        return "\n".join(f"{k} = {v}" for k, v in pairs) + "\n"

    lines = [
        f"target family: {result.family}",
        f"presentation: {result.presentation_kind}, {result.generator_count} generators, "
        f"{result.relator_count} relators",
        "validation: ok",
        f"h0_dim = {result.h0_dim}    [kernel of stacked (Ad(rho(g)) - I): "
        "Lie-algebra centralizer]",
        f"center_dim = {result.center_dim}    [center dimension of {result.family}]",
        f"orbit_dim = {result.orbit_dim}    [dim G - h0_dim]",
    ]
    if result.burnside_span is None:
        lines.append("burnside: not applicable (GL/SL targets only)")
    else:
        lines.append(
            f"burnside: {result.burnside_verdict} (span {result.burnside_span}, "
            f"word cap {result.word_cap})    [matrix-algebra spanning]")
    lines.append(
        f"cr_criterion: {result.cr_verdict}    [irreducible iff h0_dim = center_dim; "
        "assumes complete reducibility]")
    if result.burnside_verdict != IRREDUCIBLE:
        lines.append("warning: cr_criterion verdict lacks Burnside confirmation; "
                     "complete reducibility is an attestation")
    lines.append(f"good (dimension-level): {_yes_no(result.good_dimension_level)}    "
                 "[irreducibility evidence and h0_dim = center_dim; finite stabilizer "
                 "part not computed]")
    lines.append(f"z1_dim = {result.z1_dim}    [kernel of the relator constraints]")
    lines.append(f"b1_dim = {result.b1_dim}    [dim G - h0_dim]")
    lines.append(f"h1_dim = {result.h1_dim}    [z1_dim - b1_dim]")
    lines.append(f"rigid: {_yes_no(result.rigid)}    [rigid iff h1_dim = 0]")
    if result.surface_genus is not None:
        lines.append(f"surface genus = {result.surface_genus}    [canonical one-relator surface presentation]")
    if result.z1_surface_formula is not None:
        lines.append(f"z1_surface_formula = {result.z1_surface_formula}    "
                     "[(2g-1)*dim G + dim C(G)]")
        lines.append(f"scheme smooth (dimension-level): "
                     f"{_yes_no(bool(result.scheme_smooth_dimension_level))}    "
                     "[z1_dim equals the one-relator surface formula]")
    if result.h1_formula_if_good is not None:
        if result.presentation_kind == "free":
            tag = "[(n-1)*dim G + dim C(G), n = generator count]"
        else:
            tag = "[(2g-2)*dim G + 2*dim C(G)]"
        lines.append(f"h1_formula_if_good = {result.h1_formula_if_good}    {tag}")
    return "\n".join(lines) + "\n"


def render_scheme(result: SchemeResult, machine: bool = False,
                  include_equations: bool = False) -> str:
    if machine:
        pairs = [
            ("family", result.family),
            ("variables", str(result.n_variables)),
            ("equations", str(result.n_equations)),
            ("det_equations", str(result.det_equations)),
            ("relator_equations", str(result.relator_equations)),
            ("jacobian_rank", str(result.jacobian_rank)),
            ("tangent_dim", str(result.tangent_dim)),
            ("z1_dim", str(result.z1_dim)),
            ("cross_check", "PASS" if result.cross_check_pass else "FAIL"),
        ]
        return "\n".join(f"{k} = {v}" for k, v in pairs) + "\n"
    lines = [
        f"target family: {result.family}",
        f"variables = {result.n_variables}    [n^2 per generator, plus one reciprocal "
        "determinant per generator for GL]",
        f"equations = {result.n_equations}    [{result.det_equations} determinant + "
        f"{result.relator_equations} relator-entry equations]",
        f"jacobian_rank = {result.jacobian_rank}    [exact rank at the representation]",
        f"tangent_dim = {result.tangent_dim}    [variables - jacobian_rank]",
        f"z1_dim = {result.z1_dim}    [kernel of the relator constraints]",
        f"tangent dim = dim Z1: {'PASS' if result.cross_check_pass else 'FAIL'}",
    ]
    if include_equations:
        lines.append("equations:")
        lines.extend(result.equations)
    return "\n".join(lines) + "\n"


def render_lagrangian(result: LagrangianResult, machine: bool = False) -> str:
    verdict = "LAGRANGIAN" if result.lagrangian else "not lagrangian"
    if machine:
        pairs = [
            ("family", result.family),
            ("source_genus", str(result.source_genus)),
            ("z1_target_dim", str(result.z1_target_dim)),
            ("h1_target_dim", str(result.h1_target_dim)),
            ("h1_boundary_dim", str(result.h1_boundary_dim)),
            ("image_dim", str(result.image_dim)),
            ("half_h1", str(result.half_h1)),
            ("isotropic", _bool(result.isotropic)),
            ("lagrangian", _bool(result.lagrangian)),
        ]
        return "\n".join(f"{k} = {v}" for k, v in pairs) + "\n"
    lines = [
        f"target family: {result.family}",
        f"boundary surface genus = {result.source_genus}    [canonical one-relator surface presentation]",
        f"z1_target_dim = {result.z1_target_dim}    [cocycles of the interior group]",
        f"h1_target_dim = {result.h1_target_dim}    [interior h1]",
        f"h1_boundary_dim = {result.h1_boundary_dim}    [h1 of the boundary surface "
        "at the restricted representation]",
        f"image_dim = {result.image_dim}    [rank of the pulled-back cocycles in H1 "
        "coordinates]",
        f"half_h1 = {result.half_h1}    [h1_boundary_dim / 2]",
        f"isotropic: {_yes_no(result.isotropic)}    [pairing vanishes on the image]",
        f"verdict: {verdict}    [isotropic and image_dim = half_h1]",
    ]
    return "\n".join(lines) + "\n"


def render_omega(result: OmegaResult, machine: bool = False) -> str:
    if machine:
        pairs = [
            ("family", result.family),
            ("surface_genus", str(result.surface_genus)),
            ("h1_dim", str(result.h1_dim)),
            ("burnside_verdict", result.burnside_verdict),
            ("cr_verdict", result.cr_verdict),
            ("antisymmetric", _bool(result.antisymmetric)),
            ("omega_rank", str(result.omega_rank)),
        ]
        pairs += [(f"omega_row_{i + 1}", row) for i, row in enumerate(result.rows)]
        return "\n".join(f"{k} = {v}" for k, v in pairs) + "\n"
    lines = [
        f"target family: {result.family}",
        f"surface genus = {result.surface_genus}    [canonical one-relator surface presentation]",
        f"h1_dim = {result.h1_dim}    [z1_dim - b1_dim]",
        f"irreducibility recorded: burnside {result.burnside_verdict}, "
        f"cr_criterion {result.cr_verdict}",
        f"pairing: {result.label}",
        f"antisymmetric: {_yes_no(result.antisymmetric)}    [checked postcondition]",
        f"omega_rank = {result.omega_rank}    [exact rank of the pairing matrix]",
        "normalization: untwisted torus pairing of the dual generator cochains is +1",
        "omega rows on the H1 coset representatives:",
    ]
    lines.extend(result.rows)
    return "\n".join(lines) + "\n"
