from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pathideal_lab.complexes import path_ideal
from pathideal_lab.monomial import (
    MAX_EXPONENT,
    AmbientMismatch,
    Monomial,
    MonomialIdeal,
    colon,
    contains,
    divides,
    equals,
    exps_divides,
    format_ideal,
    ideal_sum,
    intersect,
    is_subideal,
    lcm,
    minimalize,
    parse_monomial,
    permute_variables,
    power,
    product,
    radical,
    support,
)

from conftest import P, exps_box, ideals


def m(text: str, n: int) -> Monomial:
    return parse_monomial(text, n)


def test_divides_examples():
    assert divides(m("x1*x2", 3), m("x1*x2*x3", 3))
    assert not divides(m("x1^2", 2), m("x1*x2", 2))
    for text in ("1", "x1", "x2^5*x3"):
        assert divides(Monomial.one(3), m(text, 3))


def test_lcm_examples():
    assert lcm(m("x1*x2", 3), m("x2*x3", 3)) == m("x1*x2*x3", 3)
    assert lcm(m("x1^2", 2), m("x1*x2", 2)) == m("x1^2*x2", 2)


def test_ambient_mismatch():
    with pytest.raises(AmbientMismatch):
        divides(m("x1", 2), m("x1", 3))
    with pytest.raises(AmbientMismatch):
        ideal_sum(P("[x1]", 2), P("[x1]", 3))


def test_overflow_rejected():
    big = Monomial.var(1, 1, MAX_EXPONENT)
    with pytest.raises(OverflowError):
        big * big


def test_minimalize_examples():
    assert minimalize([m("x1", 2), m("x1*x2", 2)]).gens == ((1, 0),)
    assert minimalize([], 3).is_zero()
    I = minimalize([m("x1*x2", 3), m("x2*x3", 3), m("x1*x2*x3", 3)])
    assert format_ideal(I) == "[x1*x2, x2*x3]"


def test_power_and_product_examples():
    assert equals(power(P("[x1*x2*x3]", 3), 2), P("[x1^2*x2^2*x3^2]", 3))
    assert format_ideal(power(path_ideal(3, 2), 2)) == "[x1^2*x2^2, x1*x2^2*x3, x2^2*x3^2]"
    assert power(path_ideal(3, 2), 0).is_unit()


def test_intersect_examples():
    assert equals(intersect(P("[x1]", 2), P("[x2]", 2)), P("[x1*x2]", 2))
    assert equals(intersect(P("[x1, x2]", 3), P("[x2, x3]", 3)), P("[x2, x1*x3]", 3))


def test_colon_examples():
    I = path_ideal(5, 3)
    assert equals(colon(power(I, 2), m("x3*x4*x5", 5)), I)
    assert equals(colon(P("[x1^2*x2]", 2), m("x1", 2)), P("[x1*x2]", 2))
    # disjoint supports leave the ideal unchanged
    assert equals(colon(P("[x1*x2]", 4), P("[x4]", 4)), P("[x1*x2]", 4))
    with pytest.raises(ValueError):
        colon(P("[x1]", 2), MonomialIdeal.zero(2))


def test_radical_support():
    assert equals(radical(P("[x1^2*x2]", 2)), P("[x1*x2]", 2))
    assert support(path_ideal(4, 3)) == {1, 2, 3, 4}


def test_text_roundtrip():
    I = P("[x1^2*x3, x2*x3^4, 1]", 3)
    assert I.is_unit() and format_ideal(I) == "[1]"
    assert format_ideal(MonomialIdeal.zero(2)) == "[]"
    J = P("[x1^2*x3, x2*x3^4]", 3)
    assert P(format_ideal(J), 3) == J


def _members(I: MonomialIdeal, bound: int) -> set:
    return {e for e in exps_box(I.ambient, bound) if contains(I, Monomial(e))}


def _naive_members(gens, n, bound):
    return {e for e in exps_box(n, bound) if any(exps_divides(g, e) for g in gens)}


BOUND = 6


@given(ideals())
def test_minimalize_is_idempotent(I):
    assert MonomialIdeal.from_exps(I.ambient, I.gens) == I


@given(st.lists(st.tuples(*[st.integers(0, 3)] * 3), min_size=1, max_size=5), st.randoms())
def test_minimalize_order_independent(gens, rnd):
    shuffled = list(gens)
    rnd.shuffle(shuffled)
    assert MonomialIdeal.from_exps(3, gens) == MonomialIdeal.from_exps(3, shuffled)
    assert _members(MonomialIdeal.from_exps(3, gens), BOUND) == _naive_members(gens, 3, BOUND)


@given(ideals(), ideals())
def test_sum_and_intersection_membership(I, J):
    a, b = _members(I, BOUND), _members(J, BOUND)
    assert _members(ideal_sum(I, J), BOUND) == a | b
    assert _members(intersect(I, J), BOUND) == a & b


@given(ideals(), ideals())
def test_product_membership(I, J):
    prods = [tuple(x + y for x, y in zip(g, h)) for g in I.gens for h in J.gens]
    assert _members(product(I, J), BOUND) == _naive_members(prods, 3, BOUND)


@settings(max_examples=60)
@given(ideals(), ideals(max_exp=2, max_gens=2))
def test_colon_membership(I, J):
    inside = _members(I, BOUND + 2)
    expected = {
        e for e in exps_box(3, BOUND // 2)
        if all(tuple(x + y for x, y in zip(e, g)) in inside for g in J.gens)
    }
    got = {e for e in exps_box(3, BOUND // 2) if contains(colon(I, J), Monomial(e))}
    assert got == expected


@given(ideals(), ideals(), ideals(max_exp=2, max_gens=2))
def test_colon_by_sum_is_intersection_of_colons(I, J, K):
    # (I : (J + K)) = (I : J) ∩ (I : K)
    assert equals(colon(I, ideal_sum(J, K)), intersect(colon(I, J), colon(I, K)))


@given(ideals(max_gens=3), st.integers(1, 3))
def test_power_recursion_and_radical(I, s):
    assert equals(power(I, s + 1), product(power(I, s), I))
    assert equals(radical(power(I, s)), radical(I))


@given(ideals(), ideals())
def test_subideal_matches_membership(I, J):
    assert is_subideal(I, J) == (_members(I, BOUND) <= _members(J, BOUND))


@given(ideals(), st.permutations([1, 2, 3]))
def test_permutation_is_invertible(I, perm):
    inverse = [0] * 3
    for i, p in enumerate(perm, start=1):
        inverse[p - 1] = i
    assert permute_variables(permute_variables(I, perm), inverse) == I
