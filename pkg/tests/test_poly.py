import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cvm import Poly, RootSpec, SpecError, derivative, evaluate, expand_from_roots
from cvm.poly import product_form
from oracles import product_rule_derivative
from reference import WORKED_COEFFS, cvm_family


@st.composite
def root_specs(draw, max_n=32, radius=8.0, max_mult=6):
    lams = draw(st.lists(st.floats(-radius, radius, allow_nan=False), min_size=1,
                         max_size=8, unique=True))
    mults = draw(st.lists(st.integers(1, max_mult), min_size=len(lams), max_size=len(lams)))
    while sum(mults) > max_n:
        mults[mults.index(max(mults))] -= 1
    return RootSpec(tuple(zip(lams, mults)))


def test_worked_example_expansion(worked):
    assert list(expand_from_roots(worked).coeffs) == WORKED_COEFFS


@pytest.mark.parametrize("pairs, expected", [
    ([(0.0, 1)], [0.0]),
    ([(1.0, 1), (-1.0, 1)], [0.0, -1.0]),
    ([(2.0, 3)], [-6.0, 12.0, -8.0]),
])
def test_small_expansions(pairs, expected):
    assert list(expand_from_roots(RootSpec.from_pairs(pairs)).coeffs) == expected


@pytest.mark.parametrize("pairs", [
    [(1.0, 1), (1.0, 2)],
    [(1.0, 0)],
    [(1.0, -1)],
    [],
    [(math.nan, 1)],
    [(1.0, 1.5)],
    [("x", 1)],
])
def test_invalid_specs_rejected(pairs):
    with pytest.raises(SpecError):
        RootSpec.from_pairs(pairs)


def test_distinctness_is_exact():
    # no tolerance: nearly equal roots stay separate blocks
    spec = RootSpec.from_pairs([(1.0, 1), (1.0 + 2 ** -52, 1)])
    assert spec.r == 2


def test_one_based_accessor():
    p = Poly(WORKED_COEFFS)
    assert p.a(1) == 16.5
    assert p.a(10) == 36.0
    with pytest.raises(IndexError):
        p.a(0)
    assert p.ascending() == WORKED_COEFFS[::-1] + [1.0]


def test_eval_examples(worked):
    p = expand_from_roots(worked)
    assert evaluate(p, -3.0) == 0.0
    assert evaluate(p, 0.0) == 36.0
    assert evaluate(Poly([0.0, -1.0]), 2.0) == 3.0
    assert p(0.0) == 36.0


def test_derivative_examples(worked):
    assert derivative(Poly([0.0, -1.0])) == [2.0, 0.0]
    assert derivative(Poly([0.0])) == [1.0]
    assert derivative(Poly([])) == [0.0]
    # simple root: p'(-0.5) = 2.5**2 * 1.5**3 * 0.5**4, from the product rule
    p = expand_from_roots(worked)
    dp = derivative(p)
    value = 0.0
    for c in dp:
        value = value * -0.5 + c
    assert product_rule_derivative(worked, -0.5) == 1.318359375
    assert value == pytest.approx(1.318359375, rel=1e-12)


def test_roots_are_zeros_of_expansion():
    for spec in cvm_family(300, max_n=32, radius=8.0):
        p = expand_from_roots(spec)
        for lam, _ in spec.roots:
            terms = 1 + abs(lam) ** p.degree + sum(
                abs(c) * abs(lam) ** (p.degree - i) for i, c in enumerate(p.coeffs, start=1))
            assert abs(evaluate(p, lam)) <= 1e-9 * terms


@settings(max_examples=200, deadline=None)
@given(spec=root_specs(), data=st.data())
def test_expansion_invariant_under_root_order(spec, data):
    order = data.draw(st.permutations(range(spec.r)))
    shuffled = RootSpec(tuple(spec.roots[i] for i in order))
    a = np.array(expand_from_roots(spec).coeffs)
    b = np.array(expand_from_roots(shuffled).coeffs)
    # coefficient i is bounded by e_i(|lambda|); the floor absorbs underflow
    scale = np.poly(-np.repeat(np.abs(spec.lambdas), spec.multiplicities))[1:]
    assert np.all(np.abs(a - b) <= 1e-12 * scale + np.finfo(float).tiny)


def test_eval_matches_product_form():
    # relative agreement with the factored form at random points in [-8, 8]
    rng = np.random.default_rng(0)
    failures = []
    for spec in cvm_family(200, max_n=32, radius=8.0):
        p = expand_from_roots(spec)
        for x in rng.uniform(-8.0, 8.0, size=5):
            direct = product_form(spec, x)
            if abs(evaluate(p, x) - direct) > 1e-10 * abs(direct):
                failures.append((spec.n, x, direct))
    assert not failures, f"{len(failures)} of 1000 evaluations off by more than 1e-10 relative"
