"""Problem generators and the scaling benchmark behind ``cvm bench``."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from .poly import RootSpec
from .vandermonde import OpCounter, build_cvm, invert_cvm

MODES = ("single-root", "distinct-roots", "mixed")


def chebyshev_nodes(count: int) -> list[float]:
    """Chebyshev points of the first kind on [-1, 1], largest first."""
    return [math.cos((2 * i + 1) * math.pi / (2 * count)) for i in range(count)]


def bench_spec(n: int, mode: str) -> RootSpec:
    """A size-``n`` problem for the given benchmark mode.

    ``single-root``
        one root ``1/n`` of multiplicity ``n``; the scaling keeps the
        entries of V bounded by about ``e`` for every ``n``.
    ``distinct-roots``
        ``n`` simple roots at the Chebyshev points of [-1, 1].
    ``mixed``
        multiplicities cycling through 1, 2, 3, 4 (the last one truncated
        to reach ``n``) at Chebyshev points.
    """
    if n < 1:
        raise ValueError(f"size must be positive, got {n}")
    if mode == "single-root":
        return RootSpec(((1.0 / n, n),))
    if mode == "distinct-roots":
        return RootSpec(tuple((x, 1) for x in chebyshev_nodes(n)))
    if mode == "mixed":
        mults = []
        left = n
        while left:
            m = min(len(mults) % 4 + 1, left)
            mults.append(m)
            left -= m
        return RootSpec(tuple(zip(chebyshev_nodes(len(mults)), mults)))
    raise ValueError(f"unknown mode {mode!r}; expected one of {', '.join(MODES)}")


def sample_spec(rng: np.random.Generator, max_n: int = 24, radius: float = 4.0,
                min_gap: float = 0.25, max_mult: int = 6) -> RootSpec:
    """Random spec with ``n <= max_n``, roots in ``[-radius, radius]``.

    ``n`` is uniform on ``1..max_n`` and is split into multiplicities drawn
    uniformly from ``1..min(max_mult, remaining)``.  Roots are placed
    uniformly subject to pairwise spacing ``>= min_gap`` (uniform points on
    a shortened interval, then spread by the gap) and listed in random
    order.
    """
    n = int(rng.integers(1, max_n + 1))
    mults = []
    while n:
        m = int(rng.integers(1, min(max_mult, n) + 1))
        mults.append(m)
        n -= m
    r = len(mults)
    slack = 2 * radius - (r - 1) * min_gap
    if slack < 0:
        raise ValueError(f"{r} roots with gap {min_gap} do not fit in [-{radius}, {radius}]")
    base = np.sort(rng.uniform(0.0, slack, size=r))
    roots = -radius + base + min_gap * np.arange(r)
    roots = rng.permutation(roots)
    return RootSpec(tuple((float(x), m) for x, m in zip(roots, mults)))


@dataclass
class BenchRow:
    n: int
    seconds: float
    madds: int
    residual: float


def run_bench(sizes, mode: str = "single-root", repeat: int = 3) -> list[BenchRow]:
    rows = []
    for n in sizes:
        spec = bench_spec(n, mode)
        best = math.inf
        for _ in range(repeat):
            counter = OpCounter()
            t0 = time.perf_counter()
            X = invert_cvm(spec, counter=counter)
            best = min(best, time.perf_counter() - t0)
        V = build_cvm(spec)
        residual = float(np.max(np.abs(V @ X - np.eye(n))))
        rows.append(BenchRow(n, best, counter.madds, residual))
    return rows


def format_bench(rows: list[BenchRow], mode: str) -> str:
    lines = [f"mode: {mode}",
             f"{'n':>6}  {'seconds':>11}  {'madds':>12}  {'ratio':>6}  {'residual':>10}"]
    prev = None
    for row in rows:
        ratio = f"{row.madds / prev.madds:6.3f}" if prev and prev.madds else f"{'-':>6}"
        lines.append(f"{row.n:>6}  {row.seconds:11.6f}  {row.madds:>12}  {ratio}  {row.residual:10.3e}")
        prev = row
    return "\n".join(lines) + "\n"
