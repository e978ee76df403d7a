"""HTTP front end: one stateless endpoint per analysis.

All computation is pure and exact, so requests are independent and the
service holds no state; the CLI drives the same run_* functions in process.
"""

from __future__ import annotations

from dataclasses import asdict

from fastapi import FastAPI, HTTPException

from ..problems import ParseError, parse_problem
from ..reports import (UnsupportedProblemError, ValidationFailure, render_analyze,
                       render_lagrangian, render_omega, render_scheme, run_analyze,
                       run_lagrangian, run_omega, run_scheme)
from .models import (AnalyzeResponse, ErrorDetail, HealthResponse,
                     LagrangianResponse, OmegaResponse, ProblemRequest,
                     SchemeRequest, SchemeResponse)

app = FastAPI(
    title="charvar",
    description="Exact local structure of representation and character varieties: "
                "twisted cohomology, scheme tangents, and the surface pairing.",
    version="0.1.0",
)


def _parse(text: str):
    try:
        return parse_problem(text)
    except ParseError as exc:
        detail = ErrorDetail(kind="parse", message=exc.message,
                             line=exc.line, col=exc.col)
        raise HTTPException(status_code=400, detail=detail.model_dump()) from None


def _run(fn, *args):
    try:
        return fn(*args)
    except ValidationFailure as exc:
        detail = ErrorDetail(kind="validation", message=str(exc),
                             violations=exc.violations)
        raise HTTPException(status_code=400, detail=detail.model_dump()) from None
    except UnsupportedProblemError as exc:
        detail = ErrorDetail(kind="unsupported", message=str(exc))
        raise HTTPException(status_code=400, detail=detail.model_dump()) from None


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(status="ok")


@app.post("/analyze", response_model=AnalyzeResponse)
def analyze(request: ProblemRequest) -> AnalyzeResponse:
    problem = _parse(request.problem)
    result = _run(run_analyze, problem, request.word_cap)
    return AnalyzeResponse(**asdict(result),
                           report=render_analyze(result),
                           machine=render_analyze(result, machine=True))


@app.post("/scheme", response_model=SchemeResponse)
def scheme(request: SchemeRequest) -> SchemeResponse:
    problem = _parse(request.problem)
    result = _run(run_scheme, problem)
    data = asdict(result)
    data["equations"] = list(result.equations)
    return SchemeResponse(**data,
                          report=render_scheme(
                              result, include_equations=request.include_equations),
                          machine=render_scheme(result, machine=True))


@app.post("/lagrangian", response_model=LagrangianResponse)
def lagrangian(request: ProblemRequest) -> LagrangianResponse:
    problem = _parse(request.problem)
    result = _run(run_lagrangian, problem)
    return LagrangianResponse(**asdict(result),
                              report=render_lagrangian(result),
                              machine=render_lagrangian(result, machine=True))


@app.post("/omega", response_model=OmegaResponse)
def omega(request: ProblemRequest) -> OmegaResponse:
    problem = _parse(request.problem)
    result = _run(run_omega, problem, request.word_cap)
    data = asdict(result)
    data["rows"] = list(result.rows)
    return OmegaResponse(**data,
                         report=render_omega(result),
                         machine=render_omega(result, machine=True))
