"""Companion and Jordan forms of a characteristic polynomial.

With ``V`` the confluent Vandermonde matrix, ``F`` the bottom-row companion
matrix and ``J`` the Jordan form (blocks in root order, ones on the
superdiagonal), ``F V = V J``.  The bottom-row layout is the one for which
``F f(lam) = lam f(lam)`` with ``f(lam) = [1, lam, ..., lam**(n-1)]``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .densemat import DenseMatrix
from .poly import Poly, RootSpec, expand_from_roots
from .vandermonde import JordanBlockSpec, _as_spec, build_cvm


@dataclass(frozen=True)
class CanonicalPair:
    F: DenseMatrix
    J: DenseMatrix

    @classmethod
    def of(cls, spec) -> "CanonicalPair":
        spec = _as_spec(spec)
        return cls(companion_matrix(expand_from_roots(spec)), jordan_matrix(spec))


def companion_matrix(p: Poly) -> DenseMatrix:
    """Ones on the superdiagonal, last row ``[-a_n, ..., -a_1]``."""
    n = p.degree
    if n < 1:
        raise ValueError("companion matrix needs a polynomial of degree >= 1")
    F = np.eye(n, k=1)
    F[-1, :] = [-c for c in reversed(p.coeffs)]
    return F


def jordan_matrix(spec) -> DenseMatrix:
    spec = _as_spec(spec)
    J = np.zeros((spec.n, spec.n))
    start = 0
    for lam, m in spec.roots:
        J[start:start + m, start:start + m] = JordanBlockSpec(lam, m).matrix()
        start += m
    return J


def similarity_residual(spec) -> float:
    """``max |F V - V J|`` for the matrices of ``spec``."""
    spec = _as_spec(spec)
    V = build_cvm(spec)
    pair = CanonicalPair.of(spec)
    return float(np.max(np.abs(pair.F @ V - V @ pair.J)))
