"""Request and response models for the analysis service."""

from __future__ import annotations

from typing import List, Optional

from pydantic import BaseModel, Field


class ProblemRequest(BaseModel):
    problem: str = Field(description="problem file text")
    word_cap: int = Field(default=6, ge=1, le=12,
                          description="word length cap for the spanning test")


class SchemeRequest(BaseModel):
    problem: str
    include_equations: bool = False


class ErrorDetail(BaseModel):
    kind: str  # parse | validation | unsupported
    message: str
    line: Optional[int] = None
    col: Optional[int] = None
    violations: List[str] = []


class AnalyzeResponse(BaseModel):
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
    report: str
    machine: str


class SchemeResponse(BaseModel):
    family: str
    n_variables: int
    n_equations: int
    det_equations: int
    relator_equations: int
    jacobian_rank: int
    tangent_dim: int
    z1_dim: int
    cross_check_pass: bool
    equations: List[str]
    report: str
    machine: str


class LagrangianResponse(BaseModel):
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
    report: str
    machine: str


class OmegaResponse(BaseModel):
    family: str
    surface_genus: int
    h1_dim: int
    burnside_verdict: str
    cr_verdict: str
    label: str
    antisymmetric: bool
    omega_rank: int
    rows: List[str]
    report: str
    machine: str


class HealthResponse(BaseModel):
    status: str
