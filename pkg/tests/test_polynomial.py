from __future__ import annotations

from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pathideal_lab.polynomial import ONE_MINUS_Z, InexactDivision, IntPolynomial, z_power

polys = st.lists(st.integers(-20, 20), max_size=6).map(lambda c: IntPolynomial(tuple(c)))


def test_printing():
    assert str(IntPolynomial((1, 1, -1))) == "1 + z - z^2"
    assert str(IntPolynomial((1, 0, -2, 1))) == "1 - 2*z^2 + z^3"
    assert str(IntPolynomial(())) == "0"
    assert IntPolynomial((0, 0)).degree == -1


def test_divide_exact_and_inexact():
    assert IntPolynomial((1, 0, -2, 1)).divide_one_minus_z() == IntPolynomial((1, 1, -1))
    with pytest.raises(InexactDivision):
        IntPolynomial((1, 1)).divide_one_minus_z()


@given(polys)
def test_division_inverts_multiplication(p):
    assert (p * ONE_MINUS_Z).divide_one_minus_z() == p


@given(polys, polys, st.integers(-3, 3))
def test_ring_evaluation(p, q, z):
    assert (p * q)(z) == p(z) * q(z)
    assert (p + q)(z) == p(z) + q(z)
    assert p.shift(2)(z) == z * z * p(z)


@given(polys)
def test_taylor_at_one_reconstructs(p):
    # p(z) = sum_i c_i (z - 1)^i with c_i = p^(i)(1)/i!
    cs = [p.taylor_at_one(i) for i in range(max(p.degree + 1, 1))]
    for z in range(-2, 4):
        assert sum(c * (z - 1) ** i for i, c in enumerate(cs)) == p(z)


def test_one_minus_z_powers():
    for k in range(5):
        assert (ONE_MINUS_Z ** k).coeffs == tuple((-1) ** i * comb(k, i) for i in range(k + 1))
    assert z_power(3)(2) == 8
