from __future__ import annotations

import math
import random

import pytest
from conftest import SMALL_TOWERS, get_tower
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import fq_rank_naive

from lrscodes.errors import ParameterError
from lrscodes.linpoly import (
    LinearizedPoly,
    all_polys,
    dickson,
    evaluate,
    image_dim,
    is_invertible,
    kernel_dim,
    twist_by_alpha,
)


def trace(F):
    return LinearizedPoly(F, (1,) * F.m, 1)


def test_identity_and_zero():
    F = get_tower(2, 1, 3)
    I, Z = LinearizedPoly.identity(F), LinearizedPoly.zero(F)
    assert all(I(x) == x and Z(x) == 0 for x in F.elements())
    assert (kernel_dim(I), image_dim(I)) == (0, 3)
    assert kernel_dim(Z) == 3 and Z.degree is None
    assert dickson(I).entries == tuple(tuple(int(i == j) for j in range(3)) for i in range(3))
    assert dickson(Z).rank == 0
    assert is_invertible(I) and not is_invertible(Z)


def test_trace_over_f8():
    F = get_tower(2, 1, 3)
    T = trace(F)
    g = F.gen_power(1)
    assert T(g) == F.sum([g, F.pow(g, 2), F.pow(g, 4)])
    assert all(F.is_in_subfield(T(x)) for x in F.elements())
    assert (kernel_dim(T), image_dim(T)) == (2, 1)
    D = dickson(T)
    assert D.entries == ((1, 1, 1),) * 3
    assert D.rank == 1
    assert not is_invertible(T)


def test_artin_schreier_kernel():
    F = get_tower(3, 1, 2)
    L = LinearizedPoly(F, (F.neg(1), 1))  # x^q - x
    assert kernel_dim(L) == 1
    assert sorted(x for x in F.elements() if L(x) == 0) == F.base_field()


def test_scalar_is_invertible():
    for pam in [(2, 1, 3), (3, 1, 2), (2, 2, 2)]:
        F = get_tower(*pam)
        assert is_invertible(LinearizedPoly(F, (F.gen_power(1),)))


def test_reduction_mod_xqm_minus_x():
    F = get_tower(2, 1, 3)
    L = LinearizedPoly(F, (1, 0, 0, 1))  # x + x^(q^3) = 2x = 0 in char 2
    assert L.is_zero()
    assert len(LinearizedPoly(F, (1,)).coeffs) == 3


def test_bad_twist_and_coefficient():
    F = get_tower(2, 1, 4)
    with pytest.raises(ParameterError):
        LinearizedPoly(F, (1,), 2)
    with pytest.raises(ParameterError):
        LinearizedPoly(F, (F.order,))
    with pytest.raises(ParameterError):
        evaluate(LinearizedPoly.identity(F), F.order)


def test_dickson_layout():
    F = get_tower(2, 1, 4)
    L = LinearizedPoly(F, (2, 3, 0, 5), 3)
    D = dickson(L).entries
    for i in range(1, 4):
        prev = D[i - 1]
        assert D[i] == tuple(F.frobenius(c, 3) for c in (prev[-1],) + prev[:-1])


def test_twist_by_alpha():
    F = get_tower(3, 1, 2)
    g = F.gen_power(1)
    assert twist_by_alpha(F, (1, 1), g).coeffs == (1, g)
    assert twist_by_alpha(F, (1, 1), 1).coeffs == (1, 1)
    assert twist_by_alpha(F, (g,), F.gen_power(5)).coeffs == (g, 0)
    with pytest.raises(ParameterError):
        twist_by_alpha(F, (1,), 0)


@pytest.mark.parametrize("pam", [(2, 1, 2), (2, 1, 3), (3, 1, 2), (2, 2, 2)])
def test_exhaustive_small_algebras(pam):
    """Every reduced polynomial: Dickson rank, image, kernel, invertibility by bijectivity."""
    F = get_tower(*pam)
    for s in [s for s in range(1, F.m + 1) if math.gcd(s, F.m) == 1][:2]:
        for L in all_polys(F, s):
            vals = [L(x) for x in F.elements()]
            img = fq_rank_naive(F, set(vals))
            assert image_dim(L) == img == dickson(L).rank
            assert kernel_dim(L) + img == F.m
            assert is_invertible(L) == (len(set(vals)) == F.order)
            if not L.is_zero():
                assert kernel_dim(L) <= L.degree


def random_poly(F, s, rng):
    while True:
        cs = tuple(rng.randrange(F.order) for _ in range(F.m))
        if any(cs):
            return LinearizedPoly(F, cs, s)


@pytest.mark.parametrize("pam", [pam for pam in SMALL_TOWERS if pam[0] ** (pam[1] * pam[2]) <= 1 << 10 and pam[2] > 1])
def test_random_polys_rank_and_kernel(pam):
    F = get_tower(*pam)
    rng = random.Random(hash(pam))
    twists = [s for s in range(1, F.m) if math.gcd(s, F.m) == 1]
    for i in range(60):
        L = random_poly(F, twists[i % len(twists)], rng)
        assert dickson(L).rank == image_dim(L)
        assert kernel_dim(L) <= L.degree


@st.composite
def poly_and_points(draw):
    pam = draw(st.sampled_from([p for p in SMALL_TOWERS if p[2] > 1 and p[0] ** (p[1] * p[2]) <= 1024]))
    F = get_tower(*pam)
    twists = [s for s in range(1, F.m) if math.gcd(s, F.m) == 1]
    s = draw(st.sampled_from(twists))
    cs = tuple(draw(st.integers(0, F.order - 1)) for _ in range(F.m))
    x, y = draw(st.integers(0, F.order - 1)), draw(st.integers(0, F.order - 1))
    c = draw(st.sampled_from(F.base_field()))
    return LinearizedPoly(F, cs, s), x, y, c


@given(poly_and_points())
@settings(max_examples=200, deadline=None)
def test_evaluation_is_fq_linear(data):
    L, x, y, c = data
    F = L.tower
    assert L(F.add(x, y)) == F.add(L(x), L(y))
    assert L(F.mul(c, x)) == F.mul(c, L(x))
    assert int(L.eval_all()[x]) == L(x)


@given(poly_and_points(), st.integers(1, 10**6))
@settings(max_examples=200, deadline=None)
def test_twist_matches_skew_evaluation(data, a):
    """F_alpha(x) = sum f_i N^i(alpha) x^(q^(s i)), built term by term from the cocycle."""
    L, x, _, _ = data
    F = L.tower
    alpha = a % (F.order - 1) + 1
    T = twist_by_alpha(F, L.coeffs, alpha, L.s)
    acc, tn = 0, 1
    for i, f in enumerate(L.coeffs):
        acc = F.add(acc, F.mul(F.mul(f, tn), F.frobenius(x, L.s, i)))
        tn = F.mul(tn, F.frobenius(alpha, L.s, i))
    assert T(x) == acc


def test_prime_field_two_elements():
    # F_2 has a one-element multiplicative group, so Frobenius exponents reduce to 0 mod 1
    F = get_tower(2)
    L = LinearizedPoly.identity(F)
    assert list(L.eval_all()) == [0, 1]
    assert image_dim(L) == dickson(L).rank == 1 and kernel_dim(L) == 0
