"""Dense real matrices and a Gaussian-elimination inverse.

Matrices are plain 2-D ``float64`` numpy arrays.  :func:`gauss_inverse` is
an O(n**3) reference used to check the structured inverse; it is not tuned
for speed.
"""

from __future__ import annotations

import numpy as np

from .poly import CvmError

DenseMatrix = np.ndarray

SINGULAR_RTOL = 1e-13


class ShapeError(CvmError, ValueError):
    """Operand shapes are incompatible."""


class SingularMatrixError(CvmError, ArithmeticError):
    """Elimination met a pivot too small relative to its row."""


def as_matrix(a) -> DenseMatrix:
    m = np.array(a, dtype=float)
    if m.ndim != 2 or 0 in m.shape:
        raise ShapeError(f"expected a non-empty 2-D matrix, got shape {m.shape}")
    return m


def identity(n: int) -> DenseMatrix:
    return np.eye(n)


def matmul(a, b) -> DenseMatrix:
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise ShapeError(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def max_abs_diff(a, b) -> float:
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape != b.shape:
        raise ShapeError(f"shape mismatch {a.shape} vs {b.shape}")
    return float(np.max(np.abs(a - b)))


def _eliminate(a: DenseMatrix) -> tuple[DenseMatrix, float]:
    """Gauss-Jordan with partial pivoting on ``[a | I]``.

    Returns the inverse and the determinant (product of the pivots with
    the permutation sign).
    """
    a = as_matrix(a)
    n, m = a.shape
    if n != m:
        raise ShapeError(f"matrix must be square, got {a.shape}")
    work = np.hstack([a, np.eye(n)])
    det = 1.0
    for col in range(n):
        p = col + int(np.argmax(np.abs(work[col:, col])))
        pivot = work[p, col]
        scale = np.max(np.abs(work[p, col:n]))
        if pivot == 0.0 or abs(pivot) < SINGULAR_RTOL * scale:
            raise SingularMatrixError(
                f"pivot {pivot:.3e} in column {col} is below {SINGULAR_RTOL:g} x row scale {scale:.3e}")
        if p != col:
            work[[col, p]] = work[[p, col]]
            det = -det
        det *= pivot
        work[col] /= pivot
        factors = work[:, col].copy()
        factors[col] = 0.0
        work -= np.outer(factors, work[col])
    return work[:, n:], det


def gauss_inverse(a) -> DenseMatrix:
    """Inverse by Gaussian elimination with partial pivoting.

    Raises
    ------
    SingularMatrixError
        If a pivot falls below ``1e-13`` times the largest remaining entry
        of its row.
    """
    return _eliminate(a)[0]


def gauss_det(a) -> float:
    """Determinant from the pivots of the same elimination."""
    return _eliminate(a)[1]
