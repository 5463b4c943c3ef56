from __future__ import annotations

from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pathideal_lab.cache import KPolynomialCache
from pathideal_lab.complexes import path_ideal
from pathideal_lab.covers import min_height_primes
from pathideal_lab.hilbert import (
    colon_identity_checks,
    dimension,
    finite_differences,
    hilbert_coefficients,
    hilbert_function,
    k_polynomial,
    localization_multiplicity,
    mult_formula,
    multiplicity,
    multiplicity_sequence,
    path_power,
    q_polynomial,
    recursion_branch,
    recursion_sides,
    taylor_oracle,
    verify_degree_in_s,
    verify_main,
)
from pathideal_lab.monomial import MonomialIdeal, contains, Monomial, permute_variables, power
from pathideal_lab.polynomial import IntPolynomial, ONE_MINUS_Z, z_power

from conftest import P, exps_box, ideals


def poly(*c):
    return IntPolynomial(tuple(c))


def test_k_polynomial_examples():
    assert k_polynomial(P("[x1*x2]", 2)) == poly(1, 0, -1)
    assert k_polynomial(path_ideal(3, 2)) == poly(1, 0, -2, 1)
    assert k_polynomial(P("[x1, x2]", 2)) == poly(1, -2, 1)
    for t in range(1, 5):
        for s in range(1, 4):
            assert k_polynomial(path_power(t, t, s)) == poly(1) - z_power(s * t)


def test_taylor_oracle_examples():
    assert taylor_oracle(P("[x1*x2]", 2)) == poly(1, 0, -1)
    assert taylor_oracle(path_ideal(4, 2)) == k_polynomial(path_ideal(4, 2)) == poly(1, 0, -3, 2)


@settings(max_examples=80)
@given(ideals(n=4, max_exp=3, max_gens=6))
def test_k_polynomial_matches_taylor(I):
    assert k_polynomial(I, KPolynomialCache()) == taylor_oracle(I)


def _count_standard(I: MonomialIdeal, degree: int) -> int:
    return sum(
        1 for e in exps_box(I.ambient, degree)
        if sum(e) == degree and not contains(I, Monomial(e))
    )


@settings(max_examples=40)
@given(st.integers(1, 4).flatmap(lambda n: ideals(n=n, max_exp=3, max_gens=4)))
def test_hilbert_function_counts_standard_monomials(I):
    hf = hilbert_function(I, 8)
    assert hf == [_count_standard(I, d) for d in range(9)]


def test_q_polynomial_examples():
    assert q_polynomial(path_ideal(3, 2)) == poly(1, 1, -1)
    assert multiplicity(path_ideal(3, 2)) == 1
    for t in range(1, 5):
        for s in range(1, 4):
            assert multiplicity(path_power(t, t, s)) == s * t
    assert multiplicity(path_power(3, 3, 2)) == 6


@pytest.mark.parametrize("n", range(1, 5))
def test_artinian_length(n):
    m = path_ideal(n, 1)
    for s in range(1, 5):
        Ms = power(m, s)
        assert dimension(Ms) == 0
        assert multiplicity(Ms) == comb(s + n - 1, n)
        assert hilbert_coefficients(Ms) == [comb(s + n - 1, n)]


def _binomial_fit(hf: list[int], d: int, start: int) -> list[int]:
    """Solve HP(k) = sum_i (-1)^i e_i C(k + d - i, d - i) from values at k = start.."""
    from fractions import Fraction

    rows = [[Fraction((-1) ** i * comb(k + d - i, d - i)) for i in range(d + 1)] + [Fraction(hf[k])]
            for k in range(start, start + d + 1)]
    for c in range(d + 1):
        p = next(r for r in range(c, d + 1) if rows[r][c])
        rows[c], rows[p] = rows[p], rows[c]
        for r in range(d + 1):
            if r != c and rows[r][c]:
                f = rows[r][c] / rows[c][c]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[c])]
    out = [rows[i][-1] / rows[i][i] for i in range(d + 1)]
    assert all(x.denominator == 1 for x in out)
    return [int(x) for x in out]


@pytest.mark.parametrize("I", [
    P("[x1*x2]", 2), path_ideal(3, 2), path_ideal(4, 2), path_power(4, 2, 2),
    path_ideal(5, 3), P("[x1^2*x2, x2*x3^3]", 3),
], ids=str)
def test_hilbert_coefficients_match_hilbert_polynomial(I):
    # the Hilbert polynomial written as sum (-1)^i e_i C(k + d - i, d - i), d = dim - 1
    d = dimension(I) - 1
    hf = hilbert_function(I, 40)
    fitted = _binomial_fit(hf, d, 30)
    assert hilbert_coefficients(I) == fitted
    assert fitted[0] == multiplicity(I)


def test_hilbert_coefficient_examples():
    assert hilbert_coefficients(P("[x1*x2]", 2)) == [2]
    assert hilbert_coefficients(MonomialIdeal.zero(3))[0] == 1
    assert hilbert_coefficients(path_ideal(4, 2))[0] == 3


def test_unit_ideal_has_no_hilbert_data():
    with pytest.raises(ValueError):
        multiplicity(MonomialIdeal.unit(2))


@settings(max_examples=40)
@given(ideals(n=3, max_exp=2, max_gens=4), st.permutations([1, 2, 3]))
def test_multiplicity_invariant_under_relabelling(I, perm):
    if I.is_unit():
        return
    assert multiplicity(permute_variables(I, perm)) == multiplicity(I)


def test_cache_roundtrip(tmp_path):
    cache = KPolynomialCache(tmp_path)
    I = path_power(5, 2, 2)
    first = k_polynomial(I, cache)
    assert list(tmp_path.glob("*.json"))
    fresh = KPolynomialCache(tmp_path)
    assert k_polynomial(I, fresh) == first and fresh.disk_hits == 1


def test_main_formula_examples():
    assert mult_formula(4, 2, 2) == 9
    r = verify_main(4, 2, 2)
    assert (r.engine, r.formula, r.oracle) == (9, 9, 9)
    for n in range(1, 6):
        for s in range(1, 4):
            assert multiplicity(path_power(n, 1, s)) == comb(s + n - 1, n) == mult_formula(n, 1, s)
    I = path_power(6, 2, 2)
    assert localization_multiplicity(I, min_height_primes(6, 2).covers) == multiplicity(I)


def test_colon_identity_examples():
    checks = colon_identity_checks(5, 3, 2)
    assert checks["power_colon_last"] and checks["shortened_colon_degenerate"]
    assert all(colon_identity_checks(9, 3, 2).values())
    assert "shortened_colon_plus_var" not in colon_identity_checks(3, 3, 2)


@pytest.mark.parametrize("n,t,branch", [(7, 3, "b>0,n>2t"), (5, 3, "b>0,n<2t"), (6, 3, "b=0")])
def test_recursion_branches(n, t, branch):
    assert recursion_branch(n, t) == branch
    lhs, rhs = recursion_sides(n, t, 2)
    assert lhs == rhs


def test_degree_in_s_examples():
    assert multiplicity_sequence(4, 2, 5) == [3, 9, 18, 30, 45]
    assert finite_differences([3, 9, 18, 30, 45], 3) == [0, 0]
    assert verify_degree_in_s(7, 3, 5)
    assert multiplicity_sequence(3, 3, 4) == [3, 6, 9, 12]
    with pytest.raises(ValueError):
        verify_degree_in_s(4, 2, 3)
