"""Characteristic polynomials given by their roots and multiplicities.

Coefficients are stored in *descending* order without the leading one::

    p(s) = s**n + a[0] s**(n-1) + a[1] s**(n-2) + ... + a[n-1]

so ``Poly.coeffs[i - 1]`` is the coefficient conventionally called ``a_i``
(``a_1`` multiplies ``s**(n-1)``, ``a_n`` is the constant term).  Use
:meth:`Poly.a` for one-based access and :meth:`Poly.ascending` for the
full ascending list including the leading one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from numbers import Integral, Real
from typing import Iterable, Sequence

from . import _dd


class CvmError(Exception):
    """Base class for errors raised by this package."""


class SpecError(CvmError, ValueError):
    """Invalid root specification or malformed problem data."""


@dataclass(frozen=True)
class RootSpec:
    """Pairwise-distinct real roots with positive integer multiplicities.

    Build one from ``(lambda, multiplicity)`` pairs::

        >>> RootSpec.from_pairs([(-0.5, 1), (-3, 2)]).n
        3

    Distinctness is checked by exact comparison of the stored floats.
    """

    roots: tuple[tuple[float, int], ...]

    def __post_init__(self):
        pairs = []
        for item in self.roots:
            try:
                lam, mult = item
            except (TypeError, ValueError):
                raise SpecError(f"root entry {item!r} is not a (lambda, multiplicity) pair") from None
            if isinstance(lam, bool) or not isinstance(lam, Real):
                raise SpecError(f"lambda {lam!r} is not a real number")
            lam = float(lam)
            if not math.isfinite(lam):
                raise SpecError(f"lambda {lam!r} is not finite")
            if isinstance(mult, bool) or not isinstance(mult, Integral):
                raise SpecError(f"multiplicity {mult!r} is not an integer")
            if mult < 1:
                raise SpecError(f"multiplicity of root {lam!r} is {mult}, must be >= 1")
            pairs.append((lam, int(mult)))
        if not pairs:
            raise SpecError("at least one root is required")
        seen = set()
        for lam, _ in pairs:
            if lam in seen:
                raise SpecError(f"duplicate root {lam!r}")
            seen.add(lam)
        object.__setattr__(self, "roots", tuple(pairs))

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence]) -> "RootSpec":
        return cls(tuple(tuple(p) for p in pairs))

    @property
    def lambdas(self) -> list[float]:
        return [lam for lam, _ in self.roots]

    @property
    def multiplicities(self) -> list[int]:
        return [m for _, m in self.roots]

    @property
    def n(self) -> int:
        return sum(m for _, m in self.roots)

    @property
    def r(self) -> int:
        return len(self.roots)

    def __len__(self):
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)


@dataclass(frozen=True)
class Poly:
    """Monic polynomial of degree ``len(coeffs)``; see the module docstring."""

    coeffs: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(float(c) for c in self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def a(self, i: int) -> float:
        """One-based coefficient access: ``a(1)`` multiplies ``s**(n-1)``."""
        if not 1 <= i <= self.degree:
            raise IndexError(f"coefficient index {i} outside 1..{self.degree}")
        return self.coeffs[i - 1]

    def ascending(self) -> list[float]:
        """All ``n + 1`` coefficients, constant term first, leading 1 last."""
        return list(reversed(self.coeffs)) + [1.0]

    def __call__(self, x: float) -> float:
        return evaluate(self, x)


def _expand_dd(spec: RootSpec) -> tuple[list[float], list[float]]:
    """Expand ``prod (s - lambda_k)**n_k`` in double-double.

    Returns ``(hi, lo)`` lists holding a_1..a_n.  One O(n) multiplication by
    a linear factor per unit of multiplicity, taken in root order.
    """
    n = spec.n
    hi = [1.0] + [0.0] * n
    lo = [0.0] * (n + 1)
    S = _dd._SPLITTER
    deg = 0
    for lam, mult in spec.roots:
        t = S * lam
        lh = t - (t - lam)
        ll = lam - lh
        for _ in range(mult):
            deg += 1
            # c[i] <- c[i] - lam * c[i-1], descending so c[i-1] is still old
            for i in range(deg, 0, -1):
                a = hi[i - 1]
                p = a * lam
                t = S * a
                ah = t - (t - a)
                al = a - ah
                e = ((ah * lh - p) + ah * ll + al * lh) + al * ll + lo[i - 1] * lam
                # hi[i] + lo[i] - (p + e)
                b = hi[i]
                s = b - p
                bb = s - b
                e = lo[i] - e + ((b - (s - bb)) + (-p - bb))
                u = s + e
                hi[i] = u
                lo[i] = e - (u - s)
    return hi[1:], lo[1:]


def expand_from_roots(spec: RootSpec) -> Poly:
    """Monic expansion of ``prod (s - lambda_k)**n_k`` in O(n**2)."""
    if not isinstance(spec, RootSpec):
        spec = RootSpec.from_pairs(spec)
    hi, _ = _expand_dd(spec)
    return Poly(tuple(hi))


def evaluate(p: Poly, x: float) -> float:
    """Horner evaluation of ``p`` at ``x``."""
    acc = 1.0
    for c in p.coeffs:
        acc = acc * x + c
    return acc


def derivative(p: Poly) -> list[float]:
    """Descending coefficients of ``p'``; its leading entry is ``n``.

    A degree-0 polynomial (the constant 1) yields ``[0.0]``.
    """
    n = p.degree
    if n == 0:
        return [0.0]
    out = [float(n)]
    for i, c in enumerate(p.coeffs[:-1], start=1):
        out.append((n - i) * c)
    return out


def product_form(spec: RootSpec, x: float) -> float:
    """``prod (x - lambda_k)**n_k`` evaluated directly from the factors."""
    out = 1.0
    for lam, mult in spec.roots:
        out *= (x - lam) ** mult
    return out
