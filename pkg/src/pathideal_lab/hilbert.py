"""Hilbert series numerators, multiplicity, and the power-multiplicity identities
for path ideals of line graphs."""

from __future__ import annotations

import sys
from dataclasses import dataclass
from functools import lru_cache

from .cache import DEFAULT_CACHE, KPolynomialCache
from .complexes import path_ideal, path_ideal_in
from .covers import binomial, height, min_height_primes, nt_split
from .monomial import (
    Exps,
    Monomial,
    MonomialIdeal,
    colon,
    equals,
    exps_lcm,
    exps_quotient_by_gcd,
    ideal_sum,
    minimal_exps,
    order_key,
    power,
    radical,
)
from .polynomial import ONE, ZERO, IntPolynomial, z_power

TAYLOR_CAP = 20
# above this many generators the one-generator-at-a-time recursion is quadratic;
# larger ideals are first split along a variable
GENERATOR_PIVOT_LIMIT = 400


class EngineError(RuntimeError):
    """An internal consistency check of the engine failed."""


# ---- K-polynomial ---------------------------------------------------------

def _components(gens: tuple[Exps, ...]) -> list[tuple[Exps, ...]]:
    """Group generators into classes with pairwise disjoint variable sets."""
    n = len(gens[0])
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        nz = [i for i, e in enumerate(g) if e]
        r = find(nz[0])
        for i in nz[1:]:
            ri = find(i)
            if ri != r:
                parent[ri] = r
    groups: dict[int, list[Exps]] = {}
    for g in gens:
        root = find(next(i for i, e in enumerate(g) if e))
        groups.setdefault(root, []).append(g)
    return [tuple(v) for v in groups.values()]


def _kpoly(gens: tuple[Exps, ...], cache: KPolynomialCache) -> IntPolynomial:
    if not gens:
        return ONE
    hit = cache.get(gens)
    if hit is not None:
        return hit
    if sum(gens[0]) == 0:
        result = ZERO
    elif len(gens) == 1:
        result = ONE - z_power(sum(gens[0]))
    else:
        comps = _components(gens)
        if len(comps) > 1:
            result = ONE
            for comp in comps:
                result = result * _kpoly(comp, cache)
        elif len(gens) > GENERATOR_PIVOT_LIMIT:
            result = _kpoly_variable_split(gens, cache)
        else:
            result = _kpoly_connected(gens, cache)
    cache.put(gens, result)
    return result


def _kpoly_connected(gens: tuple[Exps, ...], cache: KPolynomialCache) -> IntPolynomial:
    # K(J + (m)) = K(J) - z^deg(m) K(J : m); m is the last generator in the fixed
    # order, i.e. of largest degree, ties broken by that order
    acc = ZERO
    cur = gens
    while len(cur) > 1:
        m = cur[-1]
        rest = cur[:-1]
        quotient = minimal_exps(exps_quotient_by_gcd(g, m) for g in rest)
        acc = acc - _kpoly(quotient, cache).shift(sum(m))
        cur = rest
        if len(cur) > 1 and len(_components(cur)) > 1:
            break
    return acc + _kpoly(cur, cache)


def _kpoly_variable_split(gens: tuple[Exps, ...], cache: KPolynomialCache) -> IntPolynomial:
    # K(I) = K(I + (x_i)) + z K(I : x_i) for the variable x_i occurring in most generators
    n = len(gens[0])
    counts = [0] * n
    for g in gens:
        for j, e in enumerate(g):
            if e:
                counts[j] += 1
    i = max(range(n), key=lambda j: (counts[j], -j))
    var = tuple(1 if j == i else 0 for j in range(n))
    # generators free of x_i stay minimal next to x_i itself
    plus = tuple(sorted([g for g in gens if not g[i]] + [var], key=order_key))
    quotient = minimal_exps(
        g[:i] + (g[i] - 1,) + g[i + 1:] if g[i] else g for g in gens
    )
    return _kpoly(plus, cache) + _kpoly(quotient, cache).shift(1)


def k_polynomial(I: MonomialIdeal, cache: KPolynomialCache | None = None) -> IntPolynomial:
    """Numerator ``K`` with ``HS(S/I, z) = K(z) / (1 - z)^n``."""
    cache = DEFAULT_CACHE if cache is None else cache
    stored = cache.load(I.gens)
    if stored is not None:
        return stored
    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 20000))
    try:
        result = _kpoly(I.gens, cache)
    finally:
        sys.setrecursionlimit(limit)
    cache.store(I.gens, result)
    return result


def taylor_oracle(I: MonomialIdeal, cap: int = TAYLOR_CAP) -> IntPolynomial:
    """Inclusion-exclusion over all generator subsets: sum of ``(-1)^|A| z^deg lcm(A)``."""
    gens = I.gens
    if len(gens) > cap:
        raise ValueError(f"Taylor oracle limited to {cap} generators, got {len(gens)}")
    coeffs: dict[int, int] = {}
    zero = (0,) * I.ambient

    def walk(start: int, acc: Exps, sign: int) -> None:
        d = sum(acc)
        coeffs[d] = coeffs.get(d, 0) + sign
        for j in range(start, len(gens)):
            walk(j + 1, exps_lcm(acc, gens[j]), -sign)

    walk(0, zero, 1)
    top = max(coeffs)
    return IntPolynomial(tuple(coeffs.get(k, 0) for k in range(top + 1)))


def hilbert_function(I: MonomialIdeal, max_degree: int) -> list[int]:
    """``dim_K (S/I)_k`` for ``k = 0..max_degree``, from the expansion of ``K/(1-z)^n``."""
    K = k_polynomial(I)
    series = [K.coeffs[k] if k < len(K.coeffs) else 0 for k in range(max_degree + 1)]
    for _ in range(I.ambient):
        for k in range(1, max_degree + 1):
            series[k] += series[k - 1]
    return series


# ---- dimension, Q-polynomial, multiplicity --------------------------------

def _require_proper(I: MonomialIdeal) -> None:
    if I.is_unit():
        raise ValueError("S/I is zero for the unit ideal; no Hilbert data")


def codimension(I: MonomialIdeal) -> int:
    _require_proper(I)
    return 0 if I.is_zero() else height(radical(I))


def dimension(I: MonomialIdeal) -> int:
    """Krull dimension of ``S/I``."""
    return I.ambient - codimension(I)


def q_polynomial(I: MonomialIdeal) -> IntPolynomial:
    """``K / (1 - z)^height``, so that ``HS(S/I) = Q / (1 - z)^dim``."""
    h = codimension(I)
    q = k_polynomial(I)
    try:
        for _ in range(h):
            q = q.divide_one_minus_z()
    except ArithmeticError as exc:
        raise EngineError(f"K-polynomial of {I} not divisible by (1-z)^{h}") from exc
    if q(1) <= 0:
        raise EngineError(f"Q(1) = {q(1)} is not positive for {I}")
    return q


def multiplicity(I: MonomialIdeal) -> int:
    return q_polynomial(I)(1)


def hilbert_coefficients(I: MonomialIdeal) -> list[int]:
    """``[e_0, ..., e_d]`` where ``dim S/I = d + 1``; ``e_i = Q^(i)(1) / i!``.

    For an Artinian quotient only ``e_0`` (the length) is returned.
    """
    q = q_polynomial(I)
    dim = dimension(I)
    if dim == 0:
        return [q(1)]
    return [q.taylor_at_one(i) for i in range(dim)]


# ---- path ideal powers ----------------------------------------------------

@lru_cache(maxsize=None)
def path_power(m: int, t: int, s: int, ambient: int | None = None) -> MonomialIdeal:
    """``I_t(L_m)^s`` in ``K[x1..x_ambient]`` (ambient defaults to ``m``)."""
    ambient = m if ambient is None else ambient
    if s == 0:
        return MonomialIdeal.unit(ambient)
    if s == 1:
        return path_ideal_in(m, t, ambient)
    return path_power(m, t, s - 1, ambient) * path_ideal_in(m, t, ambient)


def mult_formula(n: int, t: int, s: int) -> int:
    """Closed form ``C(s+a-1, s-1) * C(a+t-b-1, a)`` with ``n = a*t + b``."""
    a, b = nt_split(n, t)
    return binomial(s + a - 1, s - 1) * binomial(a + t - b - 1, a)


def _u(i: int, t: int, n: int) -> Monomial:
    return Monomial.from_support(range(i, i + t), n)


def _var(i: int, n: int) -> MonomialIdeal:
    return MonomialIdeal.from_exps(n, [Monomial.var(i, n).exps])


def _prod_ideal(lo: int, hi: int, n: int) -> MonomialIdeal:
    """Principal ideal ``(x_lo * ... * x_hi)``; the unit ideal for an empty range."""
    return MonomialIdeal.from_exps(n, [Monomial.from_support(range(lo, hi + 1), n).exps])


def colon_identity_checks(n: int, t: int, s: int) -> dict[str, bool]:
    """Each colon-ideal identity used for the power recursion, as an exact equality.

    Keys name the identity; identities whose indices fall outside ``1..n``
    (the ``x_{n-t}`` ones when ``n = t``) are omitted.
    """
    if s < 2 or not 1 <= t <= n:
        raise ValueError(f"need s >= 2 and 1 <= t <= n, got n={n}, t={t}, s={s}")
    checks: dict[str, bool] = {}
    u_last = _u(n - t + 1, t, n)
    I_s = path_power(n, t, s, n)
    checks["power_colon_last"] = equals(colon(I_s, u_last), path_power(n, t, s - 1, n))
    if n - t >= 1:
        left = ideal_sum(colon(path_power(n - 1, t, s, n), u_last), _var(n - t, n))
        right = ideal_sum(path_power(n - t - 1, t, s, n), _var(n - t, n))
        checks["shortened_colon_plus_var"] = equals(left, right)
        if n <= 2 * t:
            checks["shortened_colon_degenerate"] = equals(left, _var(n - t, n))
    for i in range(1, t + 1):
        if n - i + 1 < 1:
            break
        A_i = ideal_sum(path_power(n - i, t, s, n), _prod_ideal(n - t + 1, n - i + 1, n))
        A_next = ideal_sum(path_power(n - i - 1, t, s, n), _prod_ideal(n - t + 1, n - i, n))
        B_i = ideal_sum(A_i, _var(n - i + 1, n))
        checks[f"B_{i}"] = equals(B_i, ideal_sum(path_power(n - i, t, s, n), _var(n - i + 1, n)))
        checks[f"A_{i}_colon"] = equals(colon(A_i, Monomial.var(n - i + 1, n)), A_next)
    return checks


def verify_colon_identities(n: int, t: int, s: int) -> bool:
    return all(colon_identity_checks(n, t, s).values())


def _q_path(m: int, t: int, s: int) -> IntPolynomial:
    """Q-polynomial of ``S_m / I_t(L_m)^s`` in its own ring of ``m`` variables."""
    return q_polynomial(path_power(m, t, s, m))


def recursion_branch(n: int, t: int) -> str:
    """Which case of the power recursion applies; ``n = 2t`` has ``b = 0``."""
    _, b = nt_split(n, t)
    if b == 0:
        return "b=0"
    return "b>0,n>2t" if n > 2 * t else "b>0,n<2t"


def recursion_sides(n: int, t: int, s: int) -> tuple[IntPolynomial, IntPolynomial]:
    """Both sides of the Q-polynomial recursion for ``S/I_t(L_n)^s``."""
    if s < 2 or not 1 <= t < n:
        raise ValueError(f"need s >= 2 and 1 <= t < n, got n={n}, t={t}, s={s}")
    lhs = _q_path(n, t, s)
    zt = z_power(t)
    branch = recursion_branch(n, t)
    if branch == "b=0":
        rhs = zt * _q_path(n, t, s - 1)
        for i in range(1, t + 1):
            rhs = rhs + z_power(i - 1) * _q_path(n - i, t, s)
        return lhs, rhs
    rhs = zt * _q_path(n, t, s - 1) + _q_path(n - 1, t, s) - z_power(t + 1) * _q_path(n - 1, t, s - 1)
    if branch == "b>0,n>2t":
        rhs = rhs - zt * _q_path(n - t - 1, t, s)
    else:
        rhs = rhs - zt
    return lhs, rhs


def verify_recursions(n: int, t: int, s: int) -> bool:
    lhs, rhs = recursion_sides(n, t, s)
    return lhs == rhs


@dataclass(frozen=True)
class MainCheck:
    engine: int
    formula: int
    oracle: int
    match: bool


def localization_multiplicity(I: MonomialIdeal, primes) -> int:
    """Sum of local lengths over the given minimal primes of minimal height."""
    from .decomposition import local_length

    return sum(local_length(I, F) for F in primes)


def verify_main(n: int, t: int, s: int) -> MainCheck:
    if s < 1:
        raise ValueError("s must be positive")
    I_s = path_power(n, t, s, n)
    engine = multiplicity(I_s)
    formula = mult_formula(n, t, s)
    oracle = localization_multiplicity(I_s, min_height_primes(n, t).covers)
    return MainCheck(engine, formula, oracle, engine == formula == oracle)


def finite_differences(values: list[int], order: int) -> list[int]:
    for _ in range(order):
        values = [b - a for a, b in zip(values, values[1:])]
    return values


def multiplicity_sequence(n: int, t: int, s_max: int) -> list[int]:
    return [multiplicity(path_power(n, t, s, n)) for s in range(1, s_max + 1)]


def verify_degree_in_s(n: int, t: int, s_max: int) -> bool:
    """``s -> mult(S/I^s)`` on ``1..s_max`` has vanishing ``(a+1)``-st differences and
    nonvanishing ``a``-th differences."""
    a, _ = nt_split(n, t)
    if s_max < a + 2:
        raise ValueError(f"need s_max >= a + 2 = {a + 2}, got {s_max}")
    seq = multiplicity_sequence(n, t, s_max)
    return all(d == 0 for d in finite_differences(seq, a + 1)) and any(
        d != 0 for d in finite_differences(seq, a)
    )
