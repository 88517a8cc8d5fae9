"""Confluent Vandermonde matrices with an O(n**2) inverse."""

from .canonical import CanonicalPair, companion_matrix, jordan_matrix, similarity_residual
from .densemat import (
    ShapeError,
    SingularMatrixError,
    gauss_det,
    gauss_inverse,
    matmul,
    max_abs_diff,
)
from .hermite import HermiteData, hermite_interpolate, poly_eval_derivative
from .poly import CvmError, Poly, RootSpec, SpecError, derivative, evaluate, expand_from_roots
from .vandermonde import (
    CvmWorkspace,
    JordanBlockSpec,
    OpCounter,
    build_cvm,
    compute_K,
    compute_K_literal,
    cvm_det,
    identity_residual,
    invert_cvm,
    solve_cvm,
)

__all__ = [
    "CanonicalPair", "CvmError", "CvmWorkspace", "HermiteData", "JordanBlockSpec",
    "OpCounter", "Poly", "RootSpec", "ShapeError", "SingularMatrixError", "SpecError",
    "build_cvm", "companion_matrix", "compute_K", "compute_K_literal", "cvm_det",
    "derivative", "evaluate", "expand_from_roots", "gauss_det", "gauss_inverse",
    "hermite_interpolate", "identity_residual", "invert_cvm", "jordan_matrix", "matmul",
    "max_abs_diff", "poly_eval_derivative", "similarity_residual", "solve_cvm",
]
