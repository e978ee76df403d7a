"""Exact local structure of representation and character varieties.

Twisted group cohomology (Z1, B1, H1), irreducibility and centralizer
criteria, representation-scheme tangents, and the cup-product pairing on H1
of surface groups, all over the Gaussian rationals.
"""

from .scalars import DualScalar, Scalar, format_scalar, parse_scalar
from .linalg import (DualMat, Mat, SingularMatrixError, det, inverse,
                     kernel_basis, rank, solve)
from .words import (GroupHom, GroupPresentation, Word, evaluate_word, free_group,
                    free_reduce, invert, parse_word, surface_genus,
                    surface_presentation)
from .groups import (BilinearForm, GroupFamily, LieAlgebra, adjoint_matrix,
                     center_dim, is_orthogonal, lie_algebra, membership,
                     parse_family, symplectic_form, trace_form)
from .representation import (BurnsideReport, CentralizerReport, Representation,
                             burnside_irreducible, centralizer_dim,
                             conjugate_representation, cr_irreducibility_criterion,
                             validate)
from .cohomology import (Cocycle, CohomologySummary, b1_basis, coboundary,
                         compose_representation, dual_number_check,
                         evaluate_cocycle, h1_summary, pullback, z1_basis)
from .scheme import (Polynomial, PolynomialSystem, build_system, jacobian_rank_at,
                     representation_point, tangent_dim_at)
from .symplectic import (FundamentalChain, IsotropyReport, OmegaMatrix, cup_pair,
                         fundamental_chain, isotropy_check, omega_matrix)
from .problems import ParseError, ProblemFile, parse_problem

__version__ = "0.1.0"
