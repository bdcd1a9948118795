import pytest
from hypothesis import given
from hypothesis import strategies as st

from verlinde_abelian.errors import DomainError
from verlinde_abelian.families import random_orthogonal_pairs
from verlinde_abelian.mukai import (
    MukaiVector,
    check_assumptions,
    dim_invariant,
    dual,
    euler_pairing,
    fm_transform,
    is_orthogonal,
    mukai_pairing,
    twist,
)

vectors = st.builds(MukaiVector, st.integers(-30, 30), st.integers(-30, 30), st.integers(-30, 30))
MV = MukaiVector


def test_pairing_examples():
    assert mukai_pairing(MV(1, 0, -3), MV(1, 6, 3)) == 0
    assert mukai_pairing(MV(3, 1, 0), MV(0, 1, 2)) == -4


@given(vectors)
def test_self_pairing_is_twice_dimension(v):
    assert mukai_pairing(v, v) == 2 * dim_invariant(v)


@given(vectors, vectors)
def test_orthogonality_is_euler_pairing_of_dual(v, w):
    assert euler_pairing(v, w) == -mukai_pairing(v, dual(w))
    assert is_orthogonal(v, w) == (euler_pairing(v, w) == 0)


def test_dimension_examples():
    assert dim_invariant(MV(1, 0, -7)) == 7
    assert dim_invariant(MV(4, 0, 0)) == 0
    assert dim_invariant(MV(1, 6, 3)) == 33


def test_twist_examples():
    assert twist(MV(1, 0, -3), 0) == MV(1, 0, -3)
    assert twist(MV(1, 0, -3), 2) == MV(1, 2, 1)


@given(vectors, st.integers(-20, 20), st.integers(-20, 20))
def test_twist_is_an_action_preserving_dimension(v, a, b):
    assert twist(twist(v, a), b) == twist(v, a + b)
    assert dim_invariant(twist(v, a)) == dim_invariant(v)


@given(vectors, vectors, st.integers(-10, 10))
def test_opposite_twists_preserve_orthogonality(v, w, ell):
    assert euler_pairing(twist(v, -ell), twist(w, ell)) == euler_pairing(v, w)


@given(vectors)
def test_dual_and_fourier_mukai(v):
    assert dual(v) == MV(v.r, -v.k, v.chi)
    assert dim_invariant(dual(v)) == dim_invariant(v)
    assert dim_invariant(fm_transform(v)) == dim_invariant(v)
    assert fm_transform(fm_transform(v)) == v


@pytest.mark.parametrize("r,k", [(1, 3), (5, -2), (0, 1)])
def test_dual_of_transform_shape(r, k):
    assert dual(fm_transform(MV(r, k, 1))) == MV(1, k, r)


def test_assumption_report_worked_pair():
    rep = check_assumptions(MV(1, 0, -3), MV(1, 6, 3))
    assert rep.all_hold and rep.failed == []
    assert rep["hilbert_slope_bound"] is True
    assert rep.to_dict()["higher_cohomology_vanishes"] == "unknown"


def test_assumption_report_flags_failures():
    rep = check_assumptions(MV(1, 0, -1), MV(1, 0, -1))
    assert rep["orthogonal"] is False
    assert rep["product_identity"] is None
    rep = check_assumptions(MV(1, 0, -1), MV(1, 2, 1))
    assert rep.all_hold
    assert dim_invariant(MV(1, 2, 1)) == 3


def test_hilbert_bound_detects_small_slope():
    # v = (1,0,-3), w = (1,4,3): orthogonal, but k = 4 < (n + 2) h = 5.
    rep = check_assumptions(MV(1, 0, -3), MV(1, 4, 3))
    assert rep["hilbert_slope_bound"] is False


def test_identities_hold_on_generated_pairs():
    for v, w in random_orthogonal_pairs(300, seed=4):
        rep = check_assumptions(v, w)
        assert rep["product_identity"] and rep["rank_identity"]


def test_parsing_and_json():
    v = MV.parse("3, -1, 7")
    assert v.to_json() == [3, -1, 7]
    assert MV.from_json([3, -1, 7]) == v
    with pytest.raises(DomainError):
        MV.parse("1,2")
    with pytest.raises(DomainError):
        MV.parse("1,x,2")
    with pytest.raises(DomainError):
        MV(1, 2.0, 3)
