"""Confluent Vandermonde matrices: construction, determinant, O(n**2) inverse.

For roots ``lambda_1..lambda_r`` with multiplicities ``n_1..n_r`` the matrix
is ``V = [V_1 | ... | V_r]`` where block ``V_k`` holds the scaled derivative
columns ``f^(j)(lambda_k) / j!`` of ``f(x) = [1, x, ..., x**(n-1)]``.

The inverse is the vertical stack of blocks ``W_k`` (``n_k x n``).  The last
column of ``W_k`` is the vector of auxiliary coefficients
``K_k = [K_{k,1} .. K_{k,n_k}]``; the remaining columns follow from

    h_{k,1} = K_k,    h_{k,j+1} = J_k h_{k,j} + a_j h_{k,1}

with ``J_k`` the upper (superdiagonal-ones) Jordan block of ``lambda_k`` and
``a_j`` the coefficients of the characteristic polynomial, and ``h_{k,j}``
lands in column ``n - j`` (zero-based) of ``W_k``.

Both the K recursion and the column recursion run in double-double
arithmetic (see :mod:`cvm._dd`) and are rounded to float64 once at the end.
The column recursion multiplies rounding errors by ``|lambda_k|`` at every
step, so plain float64 loses several digits already at ``n = 10``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import _dd
from .densemat import DenseMatrix, ShapeError
from .poly import RootSpec, _expand_dd


def _as_spec(spec) -> RootSpec:
    return spec if isinstance(spec, RootSpec) else RootSpec.from_pairs(spec)


@dataclass
class OpCounter:
    """Tally of scalar multiply-adds performed by the inversion.

    One update of one vector entry counts once regardless of the working
    precision used to carry it out.
    """

    madds: int = 0

    def add(self, count: int) -> None:
        self.madds += count


@dataclass(frozen=True)
class JordanBlockSpec:
    lam: float
    size: int

    def __post_init__(self):
        if self.size < 1:
            raise ValueError(f"Jordan block size must be >= 1, got {self.size}")

    def matrix(self) -> DenseMatrix:
        return self.lam * np.eye(self.size) + np.eye(self.size, k=1)

    def apply(self, h: np.ndarray) -> np.ndarray:
        out = self.lam * np.asarray(h, dtype=float)
        out[:-1] += h[1:]
        return out


@dataclass(frozen=True)
class LTrace:
    """One intermediate ``L_{ki}^{(q+1)}`` value.

    ``k`` and ``i`` are one-based root indices; ``q`` is the zero-based loop
    counter, so the value belongs to step ``q + 1``.
    """

    k: int
    q: int
    i: int
    value: float


@dataclass
class CvmWorkspace:
    """Auxiliary coefficients of the inverse.

    ``K[k][j - 1]`` is ``K_{k+1,j}`` (rounded to float64).  ``K_lo`` holds the
    low halves of the double-double values.  ``L`` is the per-root scratch
    buffer left over from the last root processed, with ``NaN`` in the slot of
    that root itself.  ``trace`` lists every ``L`` value computed when tracing
    was requested.
    """

    K: list[np.ndarray]
    K_lo: list[np.ndarray] = field(repr=False, default_factory=list)
    L: Optional[np.ndarray] = None
    trace: Optional[list[LTrace]] = None


def build_cvm(spec) -> DenseMatrix:
    """The ``n x n`` confluent Vandermonde matrix of ``spec``.

    Entries ``binom(i, j) * lam**(i - j)`` (zero-based ``i >= j``) are
    generated by the Pascal recurrence ``V[i, j] = lam V[i-1, j] + V[i-1, j-1]``
    so no factorial or binomial is ever formed.
    """
    spec = _as_spec(spec)
    n = spec.n
    V = np.zeros((n, n))
    col = 0
    for lam, m in spec.roots:
        block = V[:, col:col + m]
        block[0, 0] = 1.0
        for i in range(1, n):
            row = lam * block[i - 1]
            row[1:] += block[i - 1, :-1]
            block[i] = row
        col += m
    return V


def cvm_det(spec) -> float:
    """``prod_{i<j} (lambda_j - lambda_i)**(n_i n_j)``; 1.0 when ``r == 1``."""
    spec = _as_spec(spec)
    det = 1.0
    roots = spec.roots
    for j in range(1, len(roots)):
        lj, nj = roots[j]
        for i in range(j):
            li, ni = roots[i]
            det *= (lj - li) ** (ni * nj)
    return det


def compute_K(spec, counter: Optional[OpCounter] = None, trace: bool = False) -> CvmWorkspace:
    """Auxiliary coefficients ``K_{k,j}`` by the factorial-free recursion.

    For each root ``k``: ``K_{k,n_k}`` is the reciprocal of
    ``prod_{i != k} (lambda_k - lambda_i)**n_i``.  Then for
    ``q = 0..n_k - 2``, with ``d_i = lambda_k - lambda_i`` and the scaled
    scratch ``M_i = L_{ki}^{(q)} / q!``::

        M_i <- (d_i**q K_{k,n_k-q} - q M_i) / (q + 1)
        K_{k,n_k-q-1} = -sum_{i != k} n_i M_i / d_i**(q+1)

    which is the textbook recursion divided through by ``(q+1)!``.  The
    powers ``d_i**q`` and ``d_i**-(q+1)`` are carried along the ``q`` loop.
    Work is O(n r).

    With ``trace=True`` every ``L_{ki}^{(q+1)} = (q+1)! M_i`` is recorded;
    this overflows for ``q`` beyond ~170 and is meant for small problems.
    """
    spec = _as_spec(spec)
    roots = spec.roots
    r = len(roots)
    K_hi: list[np.ndarray] = []
    K_lo: list[np.ndarray] = []
    L_buf = np.zeros(r)
    log: Optional[list[LTrace]] = [] if trace else None
    dd_mul, dd_mul_d, dd_add = _dd.mul, _dd.mul_d, _dd.add

    for k, (lk, nk) in enumerate(roots):
        foreign = [i for i in range(r) if i != k]
        d = [_dd.two_sum(lk, -roots[i][0]) for i in foreign]
        d_inv = [_dd.div((1.0, 0.0), di) for di in d]
        weight = [float(roots[i][1]) for i in foreign]

        denom = (1.0, 0.0)
        for di, i in zip(d, foreign):
            for _ in range(roots[i][1]):
                denom = dd_mul(denom, di)
        if counter is not None:
            counter.add(spec.n - nk)
        Kh = [0.0] * nk
        Kl = [0.0] * nk
        Kh[nk - 1], Kl[nk - 1] = _dd.div((1.0, 0.0), denom)

        m = len(foreign)
        M = [(0.0, 0.0)] * m
        dpow = [(1.0, 0.0)] * m
        dpow_inv = [(1.0, 0.0)] * m
        for q in range(nk - 1):
            K_top = (Kh[nk - q - 1], Kl[nk - q - 1])
            acc = (0.0, 0.0)
            for s in range(m):
                num = dd_mul(dpow[s], K_top)
                if q:
                    num = dd_add(num, dd_mul_d(M[s], -float(q)))
                    M[s] = _dd.div_d(num, float(q + 1))
                else:
                    M[s] = num
                dpow[s] = dd_mul(dpow[s], d[s])
                dpow_inv[s] = dd_mul(dpow_inv[s], d_inv[s])
                acc = dd_add(acc, dd_mul(dd_mul_d(M[s], weight[s]), dpow_inv[s]))
                if log is not None:
                    log.append(LTrace(k + 1, q, foreign[s] + 1,
                                      math.factorial(q + 1) * _dd.to_float(M[s])))
            if counter is not None:
                counter.add(4 * m)
            Kh[nk - q - 2], Kl[nk - q - 2] = -acc[0], -acc[1]

        L_buf[:] = 0.0
        for s, i in enumerate(foreign):
            L_buf[i] = _dd.to_float(M[s])
        L_buf[k] = np.nan
        K_hi.append(np.array(Kh))
        K_lo.append(np.array(Kl))

    return CvmWorkspace(K=K_hi, K_lo=K_lo, L=L_buf, trace=log)


def compute_K_literal(spec, trace: bool = False) -> CvmWorkspace:
    """The K recursion exactly as written with factorials, in float64.

    Reference for :func:`compute_K`.  ``q!`` stops being representable at
    ``q = 171``, where this raises :class:`OverflowError`.
    """
    spec = _as_spec(spec)
    roots = spec.roots
    r = len(roots)
    K_all = []
    L = [0.0] * r
    log: Optional[list[LTrace]] = [] if trace else None
    for k, (lk, nk) in enumerate(roots):
        foreign = [i for i in range(r) if i != k]
        K = [0.0] * nk
        prod = 1.0
        for i in foreign:
            prod *= (lk - roots[i][0]) ** roots[i][1]
        K[nk - 1] = 1.0 / prod
        L = [0.0] * r
        for q in range(nk - 1):
            fq = float(math.factorial(q))
            fq1 = float(math.factorial(q + 1))
            s = 0.0
            for i in foreign:
                d = lk - roots[i][0]
                L[i] = fq * d ** q * K[nk - q - 1] - q * L[i]
                s += roots[i][1] * L[i] / d ** (q + 1)
                if log is not None:
                    log.append(LTrace(k + 1, q, i + 1, L[i]))
            K[nk - q - 2] = -s / fq1
        L[k] = math.nan
        K_all.append(np.array(K))
    return CvmWorkspace(K=K_all, L=np.array(L), trace=log)


def _column_recursion(lam, same_block, h1_hi, h1_lo, a_hi, a_lo) -> list[list[float]]:
    """Columns ``h_1 .. h_n`` of the stacked recursion, as rows of a list.

    ``h_{j+1}[i] = lam[i] h_j[i] + same_block[i] h_j[i+1] + a_j h_1[i]`` in
    double-double arithmetic, written out inline; the splits of the loop
    invariants ``lam`` and ``h_1`` are computed once.
    """
    S = _dd._SPLITTER
    n = len(lam)
    lam_h = [S * x - (S * x - x) for x in lam]
    lam_l = [x - xh for x, xh in zip(lam, lam_h)]
    h1_h = [S * x - (S * x - x) for x in h1_hi]
    h1_l = [x - xh for x, xh in zip(h1_hi, h1_h)]
    rows = range(n)
    hh = list(h1_hi)
    hl = list(h1_lo)
    cols = [hh]
    for j in range(1, n):
        aj = a_hi[j - 1]
        ajl = a_lo[j - 1]
        t = S * aj
        aj_h = t - (t - aj)
        aj_l = aj - aj_h
        nh = [0.0] * n
        nl = [0.0] * n
        for i in rows:
            x = hh[i]
            lm = lam[i]
            # lam * h
            p = x * lm
            t = S * x
            xh = t - (t - x)
            xl = x - xh
            e = ((xh * lam_h[i] - p) + xh * lam_l[i] + xl * lam_h[i]) + xl * lam_l[i] + hl[i] * lm
            # + h[i+1] inside the block
            if same_block[i]:
                b = hh[i + 1]
                s = p + b
                bb = s - p
                e += (p - (s - bb)) + (b - bb) + hl[i + 1]
            else:
                s = p
            # + a_j h_1
            g = h1_hi[i]
            q = g * aj
            e += ((h1_h[i] * aj_h - q) + h1_h[i] * aj_l + h1_l[i] * aj_h) + h1_l[i] * aj_l
            e += h1_lo[i] * aj + g * ajl
            u = s + q
            bb = u - s
            e += (s - (u - bb)) + (q - bb)
            v = u + e
            nh[i] = v
            nl[i] = e - (v - u)
        hh, hl = nh, nl
        cols.append(hh)
    return cols


def invert_cvm(spec, counter: Optional[OpCounter] = None) -> DenseMatrix:
    """Inverse of the confluent Vandermonde matrix in O(n**2) operations.

    The column recursion runs for all blocks at once on the stacked length-n
    vector of ``h`` values: ``J_k h`` becomes ``lam * h + shift(h)`` where the
    shift is masked at block boundaries.
    """
    spec = _as_spec(spec)
    n = spec.n
    a_hi, a_lo = _expand_dd(spec)
    ws = compute_K(spec, counter=counter)

    lam = [l for l, m in spec.roots for _ in range(m)]
    # True where row i+1 belongs to the same block as row i
    same_block = [True] * n
    for end in np.cumsum(spec.multiplicities) - 1:
        same_block[end] = False

    h1_hi = [x for K in ws.K for x in K.tolist()]
    h1_lo = [x for K in ws.K_lo for x in K.tolist()]
    cols = _column_recursion(lam, same_block, h1_hi, h1_lo, a_hi, a_lo)
    # h_{k,j} is column n - j of W_k
    X = np.ascontiguousarray(np.array(cols[::-1]).T)
    if counter is not None:
        counter.add(2 * n * (n - 1))
    return X


def solve_cvm(spec, b) -> np.ndarray:
    """Solve ``V x = b`` as ``x = V^{-1} b``."""
    spec = _as_spec(spec)
    b = np.asarray(b, dtype=float)
    if b.ndim != 1 or b.shape[0] != spec.n:
        raise ShapeError(f"right-hand side must have length {spec.n}, got shape {b.shape}")
    return invert_cvm(spec) @ b


def identity_residual(spec, inverse: Optional[DenseMatrix] = None) -> float:
    """``max |V V^{-1} - I|``."""
    V = build_cvm(spec)
    X = invert_cvm(spec) if inverse is None else inverse
    return float(np.max(np.abs(V @ X - np.eye(V.shape[0]))))
