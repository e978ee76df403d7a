"""Representations of presented groups into matrix group families.

Validation, centralizer dimension (the fixed space of the adjoint action),
Burnside spanning for GL/SL targets, and the centralizer-dimension
irreducibility criterion for completely reducible representations.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from .groups import GroupFamily, adjoint_matrix, center_dim, membership
from .linalg import Mat, SpanTracker, inverse, kernel_basis
from .scalars import Scalar
from .words import Word, evaluate_word, format_word, GroupPresentation

IRREDUCIBLE = "irreducible"
REDUCIBLE = "reducible"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Representation:
    presentation: GroupPresentation
    family: GroupFamily
    images: Tuple[Mat, ...]

    def __post_init__(self) -> None:
        if len(self.images) != self.presentation.n_generators:
            raise ValueError("need one image matrix per generator")
        for m in self.images:
            if (m.rows, m.cols) != (self.family.n, self.family.n):
                raise ValueError(f"image is not {self.family.n}x{self.family.n}")

    def image_of(self, w: Word) -> Mat:
        return evaluate_word(w, self.images)


def validate(rho: Representation) -> List[str]:
    """All membership and relator violations, as printable strings."""
    violations: List[str] = []
    names = rho.presentation.generator_names
    for name, m in zip(names, rho.images):
        try:
            ok = membership(rho.family, m)
        except ValueError as exc:
            violations.append(f"generator {name}: {exc}")
            continue
        if not ok:
            violations.append(f"generator {name}: image is not a member of {rho.family}")
    if violations:
        return violations
    for k, rel in enumerate(rho.presentation.relators):
        if not rho.image_of(rel).is_identity():
            violations.append(
                f"relator {k + 1} ({format_word(rel, names)}) does not map to the identity")
    return violations


class InvalidRepresentationError(ValueError):
    def __init__(self, violations: Sequence[str]):
        super().__init__("; ".join(violations))
        self.violations = list(violations)


def require_valid(rho: Representation) -> None:
    violations = validate(rho)
    if violations:
        raise InvalidRepresentationError(violations)


@lru_cache(maxsize=None)
def generator_adjoints(rho: Representation) -> Tuple[Mat, ...]:
    """Adjoint matrices of the generator images, in the Lie algebra basis."""
    return tuple(adjoint_matrix(rho.family, m) for m in rho.images)


@dataclass(frozen=True)
class CentralizerReport:
    h0_dim: int
    center_dim: int
    orbit_dim: int


def centralizer_dim(rho: Representation) -> CentralizerReport:
    """Dimension data of the Lie-algebra centralizer of the image.

    h0 is the common fixed space of the generator adjoints, i.e. the kernel
    of the stacked system (Ad(rho(g)) - I) X = 0 over all generators.
    """
    d = rho.family.dim
    ident = Mat.identity(d)
    rows: List[List[Scalar]] = []
    for ad in generator_adjoints(rho):
        diff = ad - ident
        rows.extend(diff.row_lists())
    stacked = Mat.from_rows(rows) if rows else Mat.zeros(0, d)
    h0 = len(kernel_basis(stacked)) if rows else d
    return CentralizerReport(h0_dim=h0, center_dim=center_dim(rho.family),
                             orbit_dim=d - h0)


@dataclass(frozen=True)
class BurnsideReport:
    verdict: str
    span_dim: int
    word_cap: int


def burnside_irreducible(rho: Representation, word_length_cap: int = 6) -> BurnsideReport:
    """Spanning test: the image is irreducible in GL(n)/SL(n) once the
    matrices of freely reduced words up to the cap span all of M(n).

    Breadth-first over distinct image matrices with early exit; a word's
    matrix only depends on the group element, so deduplicating keeps the
    walk small on collapsing images.  "inconclusive" is the honest
    negative, since spanning may need longer words.
    """
    if rho.family.kind not in ("GL", "SL"):
        raise ValueError("Burnside spanning applies to GL and SL targets only")
    n = rho.family.n
    full = n * n
    tracker = SpanTracker(full)
    ident = Mat.identity(n)
    tracker.add(ident.flatten())
    if tracker.dim == full:
        return BurnsideReport(IRREDUCIBLE, full, word_length_cap)
    steps = list(rho.images) + [inverse(m) for m in rho.images]
    seen = {ident}
    frontier: List[Mat] = [ident]
    for _ in range(word_length_cap):
        next_frontier: List[Mat] = []
        for mat in frontier:
            for step in steps:
                product = mat * step
                if product in seen:
                    continue
                seen.add(product)
                tracker.add(product.flatten())
                if tracker.dim == full:
                    return BurnsideReport(IRREDUCIBLE, full, word_length_cap)
                next_frontier.append(product)
        frontier = next_frontier
    return BurnsideReport(INCONCLUSIVE, tracker.dim, word_length_cap)


def cr_irreducibility_criterion(rho: Representation) -> str:
    """Irreducible iff the centralizer dimension equals the center dimension.

    Valid verdict only when the caller attests the representation is
    completely reducible; deciding that is out of scope here.
    """
    report = centralizer_dim(rho)
    return IRREDUCIBLE if report.h0_dim == report.center_dim else REDUCIBLE


def is_good_dimension_level(rho: Representation,
                            burnside: Optional[BurnsideReport] = None) -> bool:
    """Dimension-level goodness: irreducibility evidence plus h0 = dim C(G).

    The finite part of the stabilizer is not computed, so this is a
    necessary-condition verdict, not a certificate.
    """
    report = centralizer_dim(rho)
    if report.h0_dim != report.center_dim:
        return False
    if burnside is not None:
        return burnside.verdict == IRREDUCIBLE
    return cr_irreducibility_criterion(rho) == IRREDUCIBLE


def conjugate_representation(rho: Representation, g: Mat) -> Representation:
    g_inv = inverse(g)
    return Representation(rho.presentation, rho.family,
                          tuple(g * m * g_inv for m in rho.images))
