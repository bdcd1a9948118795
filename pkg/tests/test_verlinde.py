import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from frozen import (
    MINUS_MULTIPLICITIES,
    MINUS_TOTAL,
    MINUS_V,
    MINUS_W,
    VERLINDE_NUMBERS,
    WORKED_COUNTS,
    WORKED_DELTA,
    WORKED_INDEX_PAIR,
    WORKED_MULTIPLICITIES,
    WORKED_SLOPE,
    WORKED_THETA_CLASS,
    WORKED_TOTAL,
    WORKED_V,
    WORKED_W,
)
from verlinde_abelian.errors import ConjectureViolation, DomainError, HypothesisError
from verlinde_abelian.families import degree_zero_pairs, random_orthogonal_pairs
from verlinde_abelian.mukai import MukaiVector
from verlinde_abelian.nslattice import circ, mat_vec, psi_matrix, pullback_matrix
from verlinde_abelian.semihom import euler_triple, invert_triple, is_admissible, rank_triple
from verlinde_abelian import verlinde as V

MV = MukaiVector
WV, WW = MV(*WORKED_V), MV(*WORKED_W)


@pytest.mark.parametrize("args,value", sorted(VERLINDE_NUMBERS.items()))
def test_verlinde_numbers(args, value):
    assert V.verlinde_number(*args) == value


@given(st.integers(1, 80), st.integers(-10, 80))
def test_verlinde_number_is_integral_and_matches_binomial(dv, dw):
    if dv + dw < 1:
        with pytest.raises(DomainError):
            V.verlinde_number(dv, dw)
        return
    val = V.verlinde_number(dv, dw)
    assert val >= 0
    assert val * (dv + dw) == dv * dv * math.comb(dv + dw, dv)


def test_verlinde_number_rejects_bad_dims():
    with pytest.raises(DomainError):
        V.verlinde_number(0, 3)


def test_worked_pair_full_table():
    tab = V.decompose(WV, WW)
    assert tab.delta == WORKED_DELTA
    assert tab.slope.as_tuple() == WORKED_SLOPE
    assert tab.summand_rank == 1
    assert tab.multiplicities() == WORKED_MULTIPLICITIES
    assert {e.order: e.count for e in tab.entries} == WORKED_COUNTS
    assert tab.total_rank == WORKED_TOTAL
    assert tab.regime == "theorem"


def test_worked_pair_variants():
    plus = V.decompose_plus(WV, WW)
    assert plus.index_pair == WORKED_INDEX_PAIR
    assert plus.multiplicities() == WORKED_MULTIPLICITIES
    minus = V.decompose_minus(WV, WW)
    assert minus.rows() == [(1, 1, WORKED_TOTAL)]


def test_minus_example_with_nontrivial_b():
    tab = V.decompose_minus(MV(*MINUS_V), MV(*MINUS_W))
    assert tab.delta == 3
    assert tab.multiplicities() == MINUS_MULTIPLICITIES
    assert tab.total_rank == MINUS_TOTAL
    # d_w = 6 is even: reported, not rejected.
    assert tab.assumptions["d_w_odd"] is False
    assert tab.regime == "conjectural"


def test_minus_rejects_wrong_shape():
    with pytest.raises(DomainError):
        V.decompose_minus(MV(1, 1, -2), MV(1, 5, 3))


def test_plus_hypothesis():
    # v = (3, 0, -1): h = 3, and w = (3, 3, 1) gives t = 9, a = gcd(9, 3)/3 = 1.
    assert V.decompose_plus(MV(3, 0, -1), MV(3, 3, 1)).delta == 1
    with pytest.raises(HypothesisError):
        V.decompose_plus(MV(2, -4, -10), MV(0, -6, -24))


def test_slope_and_delta():
    assert V.slope_triple(WV, WW).as_tuple() == WORKED_SLOPE
    assert V.delta(WV, WW) == 3
    with pytest.raises(DomainError):
        V.slope_triple(MV(1, 0, -1), MV(1, 0, -1))


def test_degree_zero_slope_shape():
    for v, w in degree_zero_pairs(max_sum=40):
        r, chi = v.r, v.chi
        h, k = w.r // r, w.k
        p = V.slope_triple(v, w)
        assert p.as_tuple() == (Fraction(-k, chi), Fraction(-k, r), Fraction(-h))
        assert V.delta(v, w) == math.gcd(k, chi) * math.gcd(k, r)


def test_slope_numerics_on_random_pairs():
    for v, w in random_orthogonal_pairs(300, seed=8):
        p, q = V.slope_triple(v, w), V.slope_triple(w, v)
        big = V.delta(v, w)
        assert p == -invert_triple(q)
        assert rank_triple(p) == v.d // big and euler_triple(p) == -(w.d // big)
        assert is_admissible(p)


def test_traces():
    assert V.trace(WV, WW, 1) == 1785
    assert V.trace(WV, WW, 3) == 3
    with pytest.raises(DomainError):
        V.trace(WV, WW, 9)


@pytest.mark.parametrize("n,k", [(3, 6), (5, 10), (3, 9)])
def test_rank_one_trace_formula(n, k):
    v, w = MV(1, 0, -n), MV(1, k, n)
    for delta in (1, math.gcd(n, k)):
        expected = Fraction(n * n, k * k) * math.comb(k * k // delta, n // delta)
        assert V.trace(v, w, delta) == expected


def test_multiplicity_errors():
    with pytest.raises(DomainError):
        V.multiplicity(WV, WW, 2)
    assert V.multiplicity(WV, WW, 3) == 22


def test_conjecture_violation_carries_value():
    exc = ConjectureViolation(3, Fraction(-1, 2))
    assert exc.order == 3 and exc.value == Fraction(-1, 2)


def test_delta_one_table_has_single_row():
    tab = V.decompose(MV(1, 0, -1), MV(1, 2, 1))
    assert tab.rows() == [(1, 1, 1)]


def test_theta_pullback_class():
    assert V.theta_pullback_class(WV, WW).as_tuple() == WORKED_THETA_CLASS
    assert V.theta_pullback_class(WV, MV(0, 0, 0)).as_tuple() == (0, 0, 0)
    for v, w in random_orthogonal_pairs(200, seed=12):
        cls = V.theta_pullback_class(v, w)
        big_r = pullback_matrix(circ(psi_matrix(v)))
        assert mat_vec(big_r, V.slope_triple(v, w).as_tuple()) == cls.as_tuple()
    # Sign pattern under the positivity assumptions, degree-zero family.
    for v, w in degree_zero_pairs(max_sum=30):
        cls = V.theta_pullback_class(v, w)
        assert cls.u > 0 and cls.v < 0


def test_duality_report_worked_pair():
    rep = V.duality_check(WV, WW)
    assert rep.ok and rep.status == "open"
    assert V.duality_check(WW, WV).ok
    assert rep.require() is rep


def test_strange_duality_status():
    assert V.strange_duality_status(MV(1, 0, -1), MV(1, 2, 1)) == "iso-or-zero"
    assert V.strange_duality_status(MV(1, 0, -3), MV(0, 1, 0)) == "iso-or-zero"
    assert V.strange_duality_status(WV, WW) == "open"


def test_duality_on_random_pairs():
    for v, w in random_orthogonal_pairs(200, seed=21):
        assert V.duality_check(v, w).ok


def test_twist_invariance():
    assert V.twist_invariance_check(WV, WW, 0)
    assert V.twist_invariance_check(WV, WW, 1)
    v0, w0 = MV(1, -1, -2), MV(1, 7, 16)
    assert V.slope_triple(v0, w0).as_tuple() == (2, -10, -3)


def test_table_serialization_is_deterministic():
    tab = V.decompose(WV, WW)
    doc = tab.to_json()
    assert doc["total_rank"] == "1785"
    assert doc["entries"][1] == {"order": 3, "count": "80", "multiplicity": "22"}
    assert tab.to_csv() == "order,count,multiplicity\n1,1,25\n3,80,22\n"
    assert V.decompose(WV, WW).to_json() == doc
    assert "1785" in tab.to_text()


def test_all_families_integral_and_symmetric():
    for v, w in degree_zero_pairs(max_sum=60) + random_orthogonal_pairs(200, seed=31):
        a, b = V.decompose(v, w), V.decompose(w, v)
        assert a.rows() == b.rows()
        assert all(m >= 0 for m in a.multiplicities().values())
