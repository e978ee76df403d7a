"""The cup-product pairing on H1 of a surface group at a representation.

The fundamental two-chain of the one-relator surface presentation is built
in the bar complex from the relator R = s_1 ... s_m: one prefix cell
[s_1...s_(k-1) | s_k] per letter plus one correction cell -[x | x^-1] per
inverse letter.  Its boundary telescopes to multiples of the degenerate
cell [1] plus a single -[R]; R is trivial in the group by definition and
every cocycle evaluates to zero on it, so the pairing

    omega(sigma, tau) = sum over cells of  coeff * B(sigma(g), Ad rho(g) tau(h))

descends to H1.  The overall sign is normalized so that, untwisted on the
torus, the pairing of the dual cochains of (a1, b1) is +1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from .groups import BilinearForm
from .linalg import Mat, SpanTracker, bilinear, mat_vec, rank, solve, vec_is_zero
from .scalars import Scalar, ZERO
from .words import EMPTY_WORD, GroupPresentation, Word, surface_genus
from .cohomology import (Cocycle, CohomologySummary, _adjoint_pairs,
                         dual_number_check, evaluate_cocycle, h1_summary,
                         relator_constraint_matrix)
from .representation import Representation

ChainTerm = Tuple[int, Word, Word]


class PairingDefectError(RuntimeError):
    """A checked postcondition of the pairing failed; indicates a bug."""


@dataclass(frozen=True)
class FundamentalChain:
    genus: int
    terms: Tuple[ChainTerm, ...]


def fundamental_chain(presentation: GroupPresentation) -> FundamentalChain:
    """Deterministic two-chain representing the surface's orientation class."""
    genus = surface_genus(presentation)
    if genus is None:
        raise ValueError("fundamental chain requires a canonical surface presentation")
    relator = presentation.relators[0]
    terms: List[ChainTerm] = []
    prefix = EMPTY_WORD
    for gen, sign in relator.letters:
        letter = Word(((gen, sign),))
        terms.append((1, prefix, letter))
        prefix = prefix * letter
    for gen, sign in relator.letters:
        if sign == -1:
            terms.append((-1, Word(((gen, 1),)), Word(((gen, -1),))))
    chain = FundamentalChain(genus=genus, terms=tuple(terms))
    defect = boundary_defect(chain)
    for w in defect:
        if not (w.is_empty() or w == relator):
            raise PairingDefectError(f"non-trivial boundary cell of length {len(w)}")
    return chain


def boundary_defect(chain: FundamentalChain) -> Dict[Word, int]:
    """Nonzero coefficients of the chain's boundary [h] - [g h] + [g],
    on freely reduced words."""
    counts: Dict[Word, int] = {}

    def bump(w: Word, c: int) -> None:
        counts[w] = counts.get(w, 0) + c
        if counts[w] == 0:
            del counts[w]

    for coeff, g, h in chain.terms:
        bump(h, coeff)
        bump(g * h, -coeff)
        bump(g, coeff)
    return counts


def _require_cocycle(sigma: Cocycle, rho: Representation) -> None:
    if not dual_number_check(sigma, rho):
        raise ValueError("input is not a cocycle at this representation")


def _word_adjoint(rho: Representation, w: Word) -> Mat:
    pairs = _adjoint_pairs(rho)
    ad = Mat.identity(rho.family.dim)
    for gen, sign in w.letters:
        ad = ad * (pairs[gen][0] if sign == 1 else pairs[gen][1])
    return ad


def cup_pair(sigma: Cocycle, tau: Cocycle, rho: Representation,
             chain: FundamentalChain, form: BilinearForm) -> Scalar:
    """Evaluate B(sigma(g), Ad rho(g) tau(h)) over the chain's cells."""
    _require_cocycle(sigma, rho)
    _require_cocycle(tau, rho)
    return _cup_pair_unchecked(sigma, tau, rho, chain, form)


def _cup_pair_unchecked(sigma: Cocycle, tau: Cocycle, rho: Representation,
                        chain: FundamentalChain, form: BilinearForm) -> Scalar:
    acc = ZERO
    for coeff, g, h in chain.terms:
        u = evaluate_cocycle(sigma, g, rho)
        w = mat_vec(_word_adjoint(rho, g), evaluate_cocycle(tau, h, rho))
        acc = acc + Scalar.of(coeff) * bilinear(form.gram, u, w)
    return acc


@dataclass(frozen=True)
class OmegaMatrix:
    """Pairing values on the chosen H1 coset representatives."""

    gram: Mat

    @property
    def h1_dim(self) -> int:
        return self.gram.rows

    def rank(self) -> int:
        return rank(self.gram)

    def is_antisymmetric(self) -> bool:
        return (self.gram + self.gram.transpose()).is_zero()


@lru_cache(maxsize=None)
def _cached_summary(rho: Representation) -> CohomologySummary:
    return h1_summary(rho)


def omega_matrix(rho: Representation, form: BilinearForm) -> OmegaMatrix:
    """Gram matrix of the pairing on h1_reps; antisymmetry is checked after
    the fact, never assumed."""
    summary = _cached_summary(rho)
    chain = fundamental_chain(rho.presentation)
    reps = summary.h1_reps
    k = len(reps)
    entries = [[ZERO] * k for _ in range(k)]
    for coeff, g, h in chain.terms:
        ad_g = _word_adjoint(rho, g)
        us = [evaluate_cocycle(s, g, rho) for s in reps]
        ws = [mat_vec(ad_g, evaluate_cocycle(s, h, rho)) for s in reps]
        c = Scalar.of(coeff)
        for i in range(k):
            for j in range(k):
                entries[i][j] = entries[i][j] + c * bilinear(form.gram, us[i], ws[j])
    gram = Mat.from_rows(entries) if k else Mat.zeros(0, 0)
    result = OmegaMatrix(gram)
    if not result.is_antisymmetric():
        raise PairingDefectError("pairing matrix failed the antisymmetry check")
    return result


@dataclass(frozen=True)
class IsotropyReport:
    isotropic: bool
    dim: int
    lagrangian: bool
    h1_dim: int


def h1_coordinates(subspace: Sequence[Cocycle], rho: Representation) -> List[Tuple[Scalar, ...]]:
    """Coordinates of the given cocycles on the H1 coset representatives.

    Each vector must lie in Z1; its expansion over the basis
    (b1_basis, h1_reps) of Z1 is computed exactly and the b1 part dropped.
    """
    summary = _cached_summary(rho)
    constraints = relator_constraint_matrix(rho)
    basis_vectors = [c.flatten() for c in summary.b1_basis + summary.h1_reps]
    total = len(basis_vectors)
    length = rho.presentation.n_generators * rho.family.dim
    basis_mat = Mat(length, total,
                    tuple(basis_vectors[j][i] for i in range(length) for j in range(total)))
    coords: List[Tuple[Scalar, ...]] = []
    for v in subspace:
        flat = v.flatten()
        if not vec_is_zero(mat_vec(constraints, flat)):
            raise ValueError("subspace vector lies outside the cocycle space")
        x = solve(basis_mat, flat)
        if x is None:
            raise PairingDefectError("cocycle failed to expand over the Z1 basis")
        coords.append(tuple(x[summary.b1_dim :]))
    return coords


def isotropy_check(subspace: Sequence[Cocycle], rho: Representation,
                   form: BilinearForm) -> IsotropyReport:
    """Project to H1, measure the projected dimension, and test whether the
    pairing vanishes on the projection.  Lagrangian means isotropic of half
    the total dimension."""
    summary = _cached_summary(rho)
    omega = omega_matrix(rho, form)
    coords = h1_coordinates(subspace, rho)
    tracker = SpanTracker(summary.h1_dim)
    for c in coords:
        tracker.add(c)
    dim = tracker.dim
    isotropic = True
    for a in coords:
        row = mat_vec(omega.gram.transpose(), a)  # row vector a^T * gram
        for b in coords:
            val = ZERO
            for x, y in zip(row, b):
                val = val + x * y
            if not val.is_zero():
                isotropic = False
                break
        if not isotropic:
            break
    lagrangian = isotropic and 2 * dim == summary.h1_dim
    return IsotropyReport(isotropic=isotropic, dim=dim,
                          lagrangian=lagrangian, h1_dim=summary.h1_dim)
