from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import burnside_by_fixed_points, orbits_by_sets

from lrscodes.counting import (
    burnside_orbits,
    coset_decomposition,
    count_inequivalent_lrs,
    count_orbits,
    divisors,
    enumerate_orbits,
    euler_phi,
    f_table,
    psi,
    stabilizer,
    verify_coset_lemma,
)
from lrscodes.errors import CapExceededError, ParameterError


def test_arithmetic_functions():
    assert euler_phi(1) == 1
    assert euler_phi(24) == 8
    assert all(euler_phi(p) == p - 1 for p in (2, 3, 5, 7, 97))
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(1) == [1]
    with pytest.raises(ParameterError):
        euler_phi(0)
    with pytest.raises(ParameterError):
        divisors(0)


def test_euler_phi_against_gcd_count():
    for n in range(1, 200):
        assert euler_phi(n) == sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def test_psi():
    assert psi(5, 5) == psi(4, 5) == 1
    assert psi(2, 5) == 2
    assert psi(2, 12) == 2
    assert psi(3, 7) == 3
    assert isinstance(psi(2, 5), Fraction)
    for bad in [(1, 5), (6, 5), (0, 3)]:
        with pytest.raises(ParameterError):
            psi(*bad)


def test_f_table_q25_t12():
    assert f_table(25, 12) == {1: 2703168, 2: 900, 3: 64, 4: 18, 6: 4, 12: 2}


def test_f_table_q7_t3():
    assert f_table(7, 3) == {1: 18, 3: 2}


def test_f_table_coprime():
    assert f_table(8, 3) == {1: 35}


def test_counts():
    assert count_orbits(25, 12) == burnside_orbits(25, 12) == 112720
    assert count_orbits(7, 3) == burnside_orbits(7, 3) == 4
    assert burnside_orbits(8, 3) == 5
    assert count_orbits(7, 2) == 3


def test_range_errors():
    for q, t in [(7, 0), (7, 7), (1, 1)]:
        with pytest.raises(ParameterError):
            f_table(q, t)
        with pytest.raises(ParameterError):
            burnside_orbits(q, t)


def test_count_inequivalent_lrs():
    r = count_inequivalent_lrs(25, 12, "m", "m")
    assert r.final_count == 112720 and r.psi == 1
    assert r.divisors == [1, 2, 3, 4, 6, 12]
    assert r.orbits_per_d == {1: 112632, 2: 75, 3: 8, 4: 3, 6: 1, 12: 1}
    for m in (5, 7, 8, 12, 30):
        r = count_inequivalent_lrs(25, 12, 2, m)
        assert r.final_count == euler_phi(m) // 2 * 112720
        assert (r.psi_numerator, r.psi_denominator) == (euler_phi(m), 2) or r.psi == Fraction(euler_phi(m), 2)
        assert count_inequivalent_lrs(7, 3, 2, m).final_count == 2 * euler_phi(m)
        assert count_inequivalent_lrs(7, 3, m - 1, m).final_count == 4
        assert count_inequivalent_lrs(13, 1, 2, m).final_count == euler_phi(m) // 2
    assert count_inequivalent_lrs(7, 3, "m-1", 9).final_count == 4
    with pytest.raises(ParameterError):
        count_inequivalent_lrs(7, 3, 2, "m")
    with pytest.raises(ParameterError):
        count_inequivalent_lrs(7, 3, 1, 4)


def test_report_dict_is_plain():
    d = count_inequivalent_lrs(7, 3, "m", "m").as_dict()
    assert d["f"] == {"1": 18, "3": 2}
    assert d["final_count"] == 4 and d["psi_numerator"] == 1


EXPECTED_Q7_T3 = {
    frozenset({(1, 2, 4), (3, 5, 6)}),
    frozenset({(1, 5, 6), (3, 4, 6), (2, 4, 5), (1, 2, 6), (2, 3, 5), (1, 3, 4)}),
    frozenset({(1, 3, 5), (2, 3, 6), (1, 4, 5), (1, 2, 3), (2, 4, 6), (4, 5, 6)}),
    frozenset({(2, 5, 6), (1, 4, 6), (2, 3, 4), (1, 3, 6), (1, 2, 5), (3, 4, 5)}),
}


def test_enumerate_q7_t3_partition():
    part = enumerate_orbits(7, 3)
    assert len(part) == 4
    # residues: 3 is the primitive root used for discrete logs mod 7
    as_res = {frozenset(tuple(sorted(pow(3, e, 7) for e in A)) for A in orb) for orb in part.orbits}
    assert as_res == EXPECTED_Q7_T3 == orbits_by_sets(7, 3)
    assert sum(len(o) for o in part.orbits) == 20
    assert sorted(part.stabilizer_orders()) == [1, 1, 1, 3]


def test_enumerate_small_cases():
    assert len(enumerate_orbits(5, 4)) == 1
    assert len(enumerate_orbits(7, 2)) == burnside_orbits(7, 2) == 3
    with pytest.raises(CapExceededError):
        enumerate_orbits(101, 50)


def test_representatives_deterministic_and_minimal():
    a, b = enumerate_orbits(13, 4), enumerate_orbits(13, 4)
    assert a.representatives == b.representatives
    assert all(orb[0] == min(orb) for orb in a.orbits)
    assert a.representatives == sorted(a.representatives)


@pytest.mark.parametrize("q", [5, 7, 11, 13])
def test_enumeration_matches_multiplicative_action(q):
    """Exponent-set orbits agree with orbits of actual residues (prime q only)."""
    g = next(r for r in range(2, q) if len({pow(r, e, q) for e in range(q - 1)}) == q - 1)
    for t in range(1, q):
        part = enumerate_orbits(q, t)
        as_res = {frozenset(tuple(sorted(pow(g, e, q) for e in A)) for A in orb) for orb in part.orbits}
        assert as_res == orbits_by_sets(q, t)


def test_coset_lemma_examples():
    # q = 7, exponent form with generator 3: {1,2,4} = {3^0, 3^2, 3^4}
    A = (0, 2, 4)
    assert sorted(stabilizer(A, 6)) == [0, 2, 4]
    assert coset_decomposition(A, 6, 3) == [0]
    assert verify_coset_lemma(A, 7, 3)
    B = (0, 1, 5)  # {1, 3, 5} as residues 3^0, 3^1, 3^5
    assert stabilizer(B, 6) == [0]
    full = tuple(range(12))
    for d in divisors(12):
        assert coset_decomposition(full, 12, d) is not None and verify_coset_lemma(full, 13, d)
    with pytest.raises(ParameterError):
        verify_coset_lemma(A, 7, 4)


@given(st.integers(2, 64), st.data())
@settings(max_examples=200, deadline=None)
def test_coset_lemma_property(q, data):
    n = q - 1
    t = data.draw(st.integers(1, n))
    A = tuple(sorted(data.draw(st.sets(st.integers(0, n - 1), min_size=t, max_size=t))))
    d = data.draw(st.sampled_from(divisors(n)))
    assert verify_coset_lemma(A, q, d)


@given(st.integers(2, 64), st.data())
@settings(max_examples=300, deadline=None)
def test_counting_invariants(q, data):
    t = data.draw(st.integers(1, q - 1))
    f = f_table(q, t)
    assert sum(f.values()) == math.comb(q - 1, t)
    assert all(v % ((q - 1) // d) == 0 and v >= 0 for d, v in f.items())
    assert count_orbits(q, t) == burnside_orbits(q, t) == burnside_by_fixed_points(q - 1, t)


def test_trivial_counts():
    for q in range(2, 65):
        assert count_orbits(q, 1) == count_orbits(q, q - 1) == 1


def test_big_integers():
    assert math.comb(100, 50) > 2**64
    assert count_orbits(101, 50) == burnside_orbits(101, 50)
