import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frozen import A1_EXAMPLE
from verlinde_abelian.arith import (
    CongruenceInstance,
    count_coordinate_solutions,
    count_torsion_solutions,
    count_torsion_solutions_direct,
    divisors,
    ext_gcd,
    factorize,
    jordan_totient,
    lemma_a2_hypotheses,
    mobius,
    multiplicativity_check,
    solve_congruence_pair,
    verify_lemma_a2,
)
from verlinde_abelian.errors import DomainError, HypothesisError
from verlinde_abelian.families import random_lemma_a1_instances


def test_factorize_and_divisors():
    assert factorize(360) == ((2, 3), (3, 2), (5, 1))
    assert factorize(-7) == ((7, 1),)
    assert divisors(12) == (1, 2, 3, 4, 6, 12)
    with pytest.raises(DomainError):
        factorize(0)


def test_mobius_values():
    assert [mobius(n) for n in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]


@given(st.integers(1, 400))
def test_jordan_totients_partition_fourth_power(n):
    assert sum(jordan_totient(e) for e in divisors(n)) == n**4
    assert jordan_totient(n) > 0


def test_jordan_totient_counts_order_exactly_n():
    for n in range(1, 7):
        brute = sum(
            1
            for x in __import__("itertools").product(range(n), repeat=4)
            if math.gcd(n, *x) == 1
        )
        assert jordan_totient(n) == brute


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
def test_ext_gcd(a, b):
    g, x, y = ext_gcd(a, b)
    assert g == math.gcd(a, b) and a * x + b * y == g


def test_solver_worked_example():
    inst, pair = A1_EXAMPLE
    assert solve_congruence_pair(CongruenceInstance(*inst)) == pair


@pytest.mark.parametrize("d", [1, 2, 7, 100])
def test_solver_identity_coefficients(d):
    m, n = solve_congruence_pair(CongruenceInstance(1, 1, 1, d))
    assert math.gcd(m, n) == 1 and (m - n) % d == 0


def test_solver_rejects_bad_hypotheses():
    with pytest.raises(HypothesisError):
        solve_congruence_pair(CongruenceInstance(2, 2, 2, 4))
    with pytest.raises(HypothesisError):
        solve_congruence_pair(CongruenceInstance(1, 1, 2, 5))
    with pytest.raises(DomainError):
        CongruenceInstance(1, 1, 1, 0)


def test_solver_random_instances_reverify():
    for inst in random_lemma_a1_instances(300, seed=11):
        m, n = solve_congruence_pair(inst)
        a, b, c, d = inst.as_tuple()
        assert math.gcd(m, n) == 1
        assert (c * m - b * n) % d == 0 and (b * m - a * n) % d == 0
        assert solve_congruence_pair(inst) == (m, n)


@pytest.mark.parametrize(
    "inst,count", [((1, 1, 1, 5), 625), ((2, 1, 3, 5), 625), ((4, 2, 1, 1), 1), ((0, 0, 0, 3), 3**8)]
)
def test_torsion_counts(inst, count):
    assert count_torsion_solutions(CongruenceInstance(*inst)) == count


def test_direct_enumeration_guard():
    assert count_torsion_solutions_direct(CongruenceInstance(1, 1, 1, 3)) == 81
    with pytest.raises(DomainError):
        count_torsion_solutions_direct(CongruenceInstance(1, 1, 1, 5))


def test_lemma_a2_rejection_is_distinct_from_failure():
    inst = CongruenceInstance(1, 0, 1, 2)
    assert not lemma_a2_hypotheses(inst)
    with pytest.raises(HypothesisError):
        verify_lemma_a2(inst)
    assert verify_lemma_a2(CongruenceInstance(2, 1, 3, 5))


def test_lemma_a2_fails_without_gcd_condition():
    # b^2 = ac mod d but gcd(a, c, d, (b^2 - ac)/d) = 2: the count exceeds d^4.
    inst = CongruenceInstance(2, 0, 0, 4)
    assert not lemma_a2_hypotheses(inst)
    assert count_coordinate_solutions(2, 0, 0, 4) == 8


def test_multiplicativity_examples():
    assert multiplicativity_check(CongruenceInstance(1, 1, 1, 1), 4, 9)
    with pytest.raises(HypothesisError):
        multiplicativity_check(CongruenceInstance(1, 1, 1, 1), 4, 6)


@settings(max_examples=60, deadline=None)
@given(st.integers(-8, 8), st.integers(-8, 8), st.integers(-8, 8), st.sampled_from([(2, 3), (3, 4), (4, 5), (5, 7), (3, 8)]))
def test_multiplicativity_random(a, b, c, split):
    assert multiplicativity_check(CongruenceInstance(a, b, c, 1), *split)
