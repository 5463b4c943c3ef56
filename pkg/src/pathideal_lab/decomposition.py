"""Irreducible decompositions and associated primes of monomial ideals."""

from __future__ import annotations

from typing import Sequence

from .complexes import path_ideal
from .covers import CoverFamily, cnt_family
from .duality import dual
from .monomial import (
    Exps,
    MonomialIdeal,
    PrimeSupport,
    exps_divides,
    is_subideal,
    minimal_exps,
    power,
)

DEFAULT_NTF_POWER = 3


def _is_pure_power(g: Exps) -> bool:
    return sum(1 for e in g if e) <= 1


def _split(gens: tuple[Exps, ...], memo: dict) -> frozenset[tuple[Exps, ...]]:
    hit = memo.get(gens)
    if hit is not None:
        return hit
    pivot = next((g for g in gens if not _is_pure_power(g)), None)
    if pivot is None:
        result = frozenset([gens])
    else:
        i = next(k for k, e in enumerate(pivot) if e)
        u = tuple(e if k == i else 0 for k, e in enumerate(pivot))
        v = tuple(0 if k == i else e for k, e in enumerate(pivot))
        result = _split(minimal_exps(gens + (u,)), memo) | _split(minimal_exps(gens + (v,)), memo)
    memo[gens] = result
    return result


def irreducible_decomposition(I: MonomialIdeal) -> list[MonomialIdeal]:
    """Irredundant irreducible components of ``I`` (each generated by pure powers).

    Components are found by repeatedly splitting a mixed generator ``u*v``
    into ``I + (u)`` and ``I + (v)``; redundant components are dropped at the
    end.  An irreducible monomial ideal contains an intersection of monomial
    ideals only if it contains one of them, so a component is redundant
    exactly when it contains another component.
    """
    if I.is_zero() or I.is_unit():
        raise ValueError("decomposition needs a nonzero proper ideal")
    comps = [MonomialIdeal(I.ambient, g) for g in _split(I.gens, {})]
    kept = [
        Q for Q in comps
        if not any(P is not Q and P != Q and is_subideal(P, Q) for P in comps)
    ]
    return sorted(kept, key=lambda Q: [(sum(g), tuple(-e for e in g)) for g in Q.gens])


def associated_primes(I: MonomialIdeal) -> CoverFamily:
    comps = irreducible_decomposition(I)
    return CoverFamily.build(
        I.ambient,
        (tuple(i + 1 for g in Q.gens for i, e in enumerate(g) if e) for Q in comps),
    )


def verify_ntf(n: int, t: int, s_max: int = DEFAULT_NTF_POWER) -> bool:
    """Associated primes of the first ``s_max`` powers of the path ideal and of its
    Alexander dual stay equal to those of the first power.

    For the path ideal these must be the six-condition covers; for the dual
    they must be the facets ``{i, ..., i+t-1}`` (the minimal covers of the
    dual's complex, by duality).
    """
    if s_max < 1:
        raise ValueError("s_max must be at least 1")
    I = path_ideal(n, t)
    target = cnt_family(n, t).as_set()
    D = dual(I)
    facets = {frozenset(range(i, i + t)) for i in range(1, n - t + 2)}
    if associated_primes(D).as_set() != facets:
        return False
    for s in range(1, s_max + 1):
        if associated_primes(power(I, s)).as_set() != target:
            return False
        if associated_primes(power(D, s)).as_set() != facets:
            return False
    return True


def localize(I: MonomialIdeal, F: Sequence[int]) -> tuple[Exps, ...]:
    """Generators of ``I`` after setting ``x_j = 1`` for ``j`` outside ``F``,
    written in the variables of ``F`` only (minimalized)."""
    idx = [i - 1 for i in sorted(F)]
    return minimal_exps(tuple(g[i] for i in idx) for g in I.gens)


def local_length(I: MonomialIdeal, F: PrimeSupport | Sequence[int]) -> int:
    """Number of standard monomials of the localization of ``I`` at the minimal
    prime ``p_F``: monomials in ``x_i`` (``i`` in ``F``) outside the ideal obtained
    by setting the other variables to 1."""
    members = tuple(F.members if isinstance(F, PrimeSupport) else sorted(F))
    if not members:
        raise ValueError("empty prime support")
    if I.is_zero():
        raise ValueError(f"{members} is not a minimal prime of the zero ideal")
    J = localize(I, members)
    k = len(members)
    if any(sum(g) == 0 for g in J):
        raise ValueError(f"{members} does not contain a minimal prime of the ideal")
    powers = [None] * k
    for g in J:
        nz = [i for i, e in enumerate(g) if e]
        if len(nz) == 1:
            powers[nz[0]] = g[nz[0]]
    if any(p is None for p in powers):
        raise ValueError(f"{members} is not a minimal prime of the ideal")
    # standard monomials form an order ideal inside the box bounded by the pure powers;
    # walk it by raising coordinates in nondecreasing index order so each is visited once
    count = 0
    stack: list[tuple[list[int], int]] = [([0] * k, 0)]
    while stack:
        e, start = stack.pop()
        if any(exps_divides(g, e) for g in J):
            continue
        count += 1
        for j in range(start, k):
            if e[j] + 1 < powers[j]:
                f = e.copy()
                f[j] += 1
                stack.append((f, j))
    return count
