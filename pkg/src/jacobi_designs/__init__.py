"""Exact computations for linear codes over finite fields.

Weight enumerators, Jacobi polynomials with several reference vectors,
MacWilliams transforms, polarization, t-design spectra, and bivariate
Molien series of finite 2x2 matrix groups.
"""

from .code import LinearCode, catalog, dual, from_generator_matrix, load_code, parse_code, puncture
from .cyclo import CycloNumber
from .design import BlockFamily, DesignSpectrum, blocks_from_code, design_report, generalized_design_check, t_spectrum
from .field import EUCLIDEAN, HERMITIAN, FieldElement, FieldSpec
from .jacobi import (
    invariance_check,
    jacobi_multi,
    jacobi_set,
    jacobi_via_polarization,
    macwilliams_transform,
    polarize,
    weight_enumerator,
)
from .molien import GroupElement, MolienTable, group_closure, homogeneous_part, molien_bivariate, verify_denominator
from .poly import SparsePoly, parse, render

__version__ = "0.1.0"

__all__ = [
    "BlockFamily",
    "CycloNumber",
    "DesignSpectrum",
    "EUCLIDEAN",
    "FieldElement",
    "FieldSpec",
    "GroupElement",
    "HERMITIAN",
    "LinearCode",
    "MolienTable",
    "SparsePoly",
    "blocks_from_code",
    "catalog",
    "design_report",
    "dual",
    "from_generator_matrix",
    "generalized_design_check",
    "group_closure",
    "homogeneous_part",
    "invariance_check",
    "jacobi_multi",
    "jacobi_set",
    "jacobi_via_polarization",
    "load_code",
    "macwilliams_transform",
    "molien_bivariate",
    "parse",
    "parse_code",
    "polarize",
    "puncture",
    "render",
    "t_spectrum",
    "verify_denominator",
    "weight_enumerator",
]
