"""Hermite interpolation through one confluent Vandermonde inversion.

Given nodes ``lambda_k`` with multiplicities ``n_k`` and prescribed values
``y[k][j] = P^(j)(lambda_k)`` for ``j = 0..n_k-1``, find the polynomial
``P(x) = c_0 + c_1 x + ... + c_{n-1} x**(n-1)``.

Column ``(k, j)`` of the confluent Vandermonde matrix is
``f^(j)(lambda_k) / j!``, so the conditions read ``V^T c = d`` with
``d_(k,j) = y[k][j] / j!`` and the solution is ``c = (V^{-1})^T d``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .poly import RootSpec, SpecError
from .vandermonde import invert_cvm


@dataclass(frozen=True)
class HermiteData:
    spec: RootSpec
    values: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        spec = self.spec if isinstance(self.spec, RootSpec) else RootSpec.from_pairs(self.spec)
        object.__setattr__(self, "spec", spec)
        try:
            values = tuple(tuple(float(v) for v in row) for row in self.values)
        except (TypeError, ValueError) as exc:
            raise SpecError(f"hermite values must be lists of numbers: {exc}") from None
        if len(values) != spec.r:
            raise SpecError(f"hermite data has {len(values)} rows for {spec.r} roots")
        for k, (row, (lam, m)) in enumerate(zip(values, spec.roots)):
            if len(row) != m:
                raise SpecError(
                    f"hermite row {k} (root {lam!r}) has {len(row)} values, multiplicity is {m}")
        object.__setattr__(self, "values", values)


def hermite_interpolate(data: HermiteData) -> np.ndarray:
    """Ascending coefficients ``c_0..c_{n-1}`` of the Hermite interpolant."""
    d = []
    for row in data.values:
        inv_fact = 1.0
        for j, y in enumerate(row):
            if j:
                inv_fact /= j
            d.append(y * inv_fact)
    return invert_cvm(data.spec).T @ np.array(d)


def poly_eval_derivative(c: Sequence[float], order: int, x: float) -> float:
    """``order``-th derivative of ``sum c[m] x**m`` at ``x``."""
    if order < 0:
        raise ValueError(f"derivative order must be >= 0, got {order}")
    coeffs = [float(v) for v in c]
    for _ in range(order):
        coeffs = [m * coeffs[m] for m in range(1, len(coeffs))]
    acc = 0.0
    for v in reversed(coeffs):
        acc = acc * x + v
    return acc


def ascending_to_descending(c: Sequence[float]) -> list[float]:
    """Reverse an ascending coefficient list (``c_0`` first) to descending."""
    return list(reversed(list(c)))


def descending_to_ascending(a: Sequence[float]) -> list[float]:
    return list(reversed(list(a)))
