"""Twisted group cohomology at a representation: Z1, B1, H1.

A cocycle assigns a Lie algebra vector to each generator; its value extends
to all words through sigma(uv) = sigma(u) + Ad(rho(u)) sigma(v).  One and
the same prefix-adjoint recursion drives word evaluation, the relator
constraint matrices whose kernel is Z1, and pullback along homomorphisms.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Sequence, Tuple

from .groups import lie_algebra
from .linalg import (DualMat, Mat, SpanTracker, inverse, kernel_basis, mat_vec,
                     vec_add, vec_is_zero, vec_neg, zero_vector)
from .scalars import Scalar
from .words import GroupHom, Word, evaluate_word, format_word
from .representation import (InvalidRepresentationError, Representation,
                             generator_adjoints, require_valid, validate)

Vector = Tuple[Scalar, ...]


@dataclass(frozen=True)
class Cocycle:
    """One Lie-algebra coordinate vector per generator."""

    values: Tuple[Vector, ...]

    def flatten(self) -> Vector:
        return tuple(x for v in self.values for x in v)

    @staticmethod
    def unflatten(flat: Sequence[Scalar], n_generators: int) -> "Cocycle":
        if n_generators == 0 or len(flat) % n_generators != 0:
            raise ValueError("flat length is not a multiple of the generator count")
        d = len(flat) // n_generators
        return Cocycle(tuple(tuple(flat[i * d : (i + 1) * d]) for i in range(n_generators)))

    def __add__(self, other: "Cocycle") -> "Cocycle":
        return Cocycle(tuple(vec_add(a, b) for a, b in zip(self.values, other.values)))


def zero_cocycle(rho: Representation) -> Cocycle:
    d = rho.family.dim
    return Cocycle(tuple(zero_vector(d) for _ in range(rho.presentation.n_generators)))


@lru_cache(maxsize=None)
def _adjoint_pairs(rho: Representation) -> Tuple[Tuple[Mat, Mat], ...]:
    return tuple((ad, inverse(ad)) for ad in generator_adjoints(rho))


def evaluate_cocycle(sigma: Cocycle, w: Word, rho: Representation) -> Vector:
    """Extend the generator values along w via the cocycle recursion.

    A generator inverse contributes sigma(g^-1) = -Ad(rho(g))^-1 sigma(g).
    """
    d = rho.family.dim
    pairs = _adjoint_pairs(rho)
    value = zero_vector(d)
    prefix = Mat.identity(d)
    for gen, sign in w.letters:
        ad, ad_inv = pairs[gen]
        if sign == 1:
            value = vec_add(value, mat_vec(prefix, sigma.values[gen]))
            prefix = prefix * ad
        else:
            step = vec_neg(mat_vec(ad_inv, sigma.values[gen]))
            value = vec_add(value, mat_vec(prefix, step))
            prefix = prefix * ad_inv
    return value


def relator_constraint_matrix(rho: Representation) -> Mat:
    """Linear system whose kernel is Z1: rows are the relator constraints.

    For each relator the coefficient block of generator slot j accumulates
    the prefix adjoints of j's occurrences (Fox-derivative evaluation).
    """
    d = rho.family.dim
    n = rho.presentation.n_generators
    pairs = _adjoint_pairs(rho)
    rows: List[List[Scalar]] = []
    for rel in rho.presentation.relators:
        blocks = [Mat.zeros(d, d) for _ in range(n)]
        prefix = Mat.identity(d)
        for gen, sign in rel.letters:
            ad, ad_inv = pairs[gen]
            if sign == 1:
                blocks[gen] = blocks[gen] + prefix
                prefix = prefix * ad
            else:
                blocks[gen] = blocks[gen] - prefix * ad_inv
                prefix = prefix * ad_inv
        for r in range(d):
            row: List[Scalar] = []
            for j in range(n):
                row.extend(blocks[j].row(r))
            rows.append(row)
    if not rows:
        return Mat.zeros(0, n * d)
    return Mat.from_rows(rows)


def z1_basis(rho: Representation) -> List[Cocycle]:
    """Exact basis of the cocycle space, as kernel of the relator constraints."""
    require_valid(rho)
    n = rho.presentation.n_generators
    return [Cocycle.unflatten(v, n) for v in kernel_basis(relator_constraint_matrix(rho))]


def coboundary(rho: Representation, a_coords: Sequence[Scalar]) -> Cocycle:
    """The cocycle gamma -> A - Ad(rho(gamma)) A for a Lie algebra vector A."""
    d = rho.family.dim
    ident = Mat.identity(d)
    values = []
    for ad in generator_adjoints(rho):
        values.append(mat_vec(ident - ad, a_coords))
    return Cocycle(tuple(values))


def b1_basis(rho: Representation) -> List[Cocycle]:
    """Basis of the coboundary space, one vector per independent column of
    the stacked maps (I - Ad(rho(g)))."""
    require_valid(rho)
    d = rho.family.dim
    n = rho.presentation.n_generators
    ident = Mat.identity(d)
    diffs = [ident - ad for ad in generator_adjoints(rho)]
    tracker = SpanTracker(n * d)
    basis: List[Cocycle] = []
    for j in range(d):
        col = tuple(x for diff in diffs for x in diff.col(j))
        if tracker.add(col):
            basis.append(Cocycle.unflatten(col, n))
    return basis


@dataclass(frozen=True)
class CohomologySummary:
    z1_dim: int
    b1_dim: int
    h1_dim: int
    z1_basis: Tuple[Cocycle, ...]
    b1_basis: Tuple[Cocycle, ...]
    h1_reps: Tuple[Cocycle, ...]


def h1_summary(rho: Representation) -> CohomologySummary:
    """Z1, B1 and coset representatives extending B1 to a basis of Z1.

    Representatives come from a deterministic pivot sweep: the first Z1
    basis vectors that grow the span of B1, in kernel-basis order.
    """
    z1 = z1_basis(rho)
    b1 = b1_basis(rho)
    n = rho.presentation.n_generators
    d = rho.family.dim
    tracker = SpanTracker(n * d)
    for c in b1:
        added = tracker.add(c.flatten())
        assert added, "coboundary basis was not independent"
    reps: List[Cocycle] = []
    for c in z1:
        if tracker.add(c.flatten()):
            reps.append(c)
    assert len(b1) + len(reps) == len(z1), "coboundaries escaped the cocycle space"
    return CohomologySummary(
        z1_dim=len(z1), b1_dim=len(b1), h1_dim=len(z1) - len(b1),
        z1_basis=tuple(z1), b1_basis=tuple(b1), h1_reps=tuple(reps))


def dual_number_check(sigma: Cocycle, rho: Representation) -> bool:
    """Relator test over dual numbers: gamma -> (I + sigma(gamma) eps) rho(gamma)
    must send every relator to the identity with vanishing eps part."""
    alg = lie_algebra(rho.family)
    duals = []
    for m, coords in zip(rho.images, sigma.values):
        s = alg.element(coords)
        duals.append(DualMat.from_parts(m, s * m))
    for rel in rho.presentation.relators:
        result = evaluate_word(rel, duals)
        if not result.value_part().is_identity():
            return False
        if not result.eps_part().is_zero():
            return False
    return True


class HomIncompatibleError(ValueError):
    """The generator-image words break a source relator at this representation."""

    def __init__(self, relator_index: int, relator_text: str):
        super().__init__(
            f"relator {relator_index + 1} ({relator_text}) does not map to the identity "
            "under the composed representation")
        self.relator_index = relator_index
        self.relator_text = relator_text


def compose_representation(hom: GroupHom, rho_target: Representation) -> Representation:
    """rho o hom on the source presentation; raises HomIncompatibleError if a
    source relator fails to map to the identity."""
    if hom.target.n_generators != rho_target.presentation.n_generators:
        raise ValueError("hom target does not match the representation's presentation")
    images = tuple(rho_target.image_of(w) for w in hom.images)
    composed = Representation(hom.source, rho_target.family, images)
    names = hom.source.generator_names
    for k, rel in enumerate(hom.source.relators):
        if not composed.image_of(rel).is_identity():
            raise HomIncompatibleError(k, format_word(rel, names))
    violations = validate(composed)
    if violations:
        raise InvalidRepresentationError(violations)
    return composed


def pullback(hom: GroupHom, rho_target: Representation, sigma: Cocycle) -> Cocycle:
    """Cocycle on the source whose generator values are sigma evaluated on the
    image words; membership in Z1 of the source is checked."""
    composed = compose_representation(hom, rho_target)
    values = tuple(evaluate_cocycle(sigma, w, rho_target) for w in hom.images)
    pulled = Cocycle(values)
    constraints = relator_constraint_matrix(composed)
    if not vec_is_zero(mat_vec(constraints, pulled.flatten())):
        raise ValueError("pullback left the cocycle space; input was not a cocycle")
    return pulled


def in_span(cocycles: Sequence[Cocycle], candidate: Cocycle) -> bool:
    if not cocycles:
        return vec_is_zero(candidate.flatten())
    tracker = SpanTracker(len(cocycles[0].flatten()))
    for c in cocycles:
        tracker.add(c.flatten())
    return tracker.contains(candidate.flatten())
