"""Palatini quartics from skew-symmetric 6x6 matrices, by exact linear algebra.

Submodules:
    field, poly, linalg, polyspace   exact fields, polynomials, rank/kernel
    polymatrix                       determinants, minors, pfaffians, hessians
    quartic, sampling                the quartic W, its singular-curve ideal,
                                     reconstruction, dual cubic, interpolation
    enumerative                      Chern/Porteous/Schubert numbers
    cli, suites, report, plotting    command-line verification reports
"""
from .field import DEFAULT_PRIME, GF, QQ, FieldElement, FieldMismatch, PrimeField, RationalField
from .poly import Polynomial, monomial_basis
from .polyspace import PolySpace, space_kernel, space_rank
from .polymatrix import (
    PolyMatrix,
    all_k_minors,
    all_maximal_minors,
    determinant,
    hessian_matrix,
    jacobian_matrix,
    pfaffian,
)
from .quartic import (
    AllMinorsZero,
    DivisionFailure,
    DualCubic,
    GenericityFailure,
    IdenticallyZero,
    NoSolution,
    NotUnique,
    PalatiniQuartic,
    SingularCurveProfile,
    SkewSystem,
    SkewSystemError,
    assemble_A,
    catalecticant_rank,
    dual_cubic,
    extract_quartic,
    fixture_WM,
    hessian_commutant_dim,
    jacobian_space,
    quartic_from_system,
    random_system,
    reconstruct_from_jacobian,
    singular_ideal_profile,
)
from .sampling import ExhaustedRetries, KernelEmpty, KernelTooBig, interpolate_quartic, sample_kernel_line_points

__version__ = "0.1.0"
