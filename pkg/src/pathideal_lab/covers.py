"""Minimal vertex covers of facet complexes and the combinatorics of their counts."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .complexes import SimplicialComplex, complex_of_ideal, facet_complex
from .monomial import MonomialIdeal, PrimeSupport, support_sort_key


@dataclass(frozen=True)
class CoverFamily:
    n: int
    covers: tuple[tuple[int, ...], ...]

    @classmethod
    def build(cls, n: int, covers: Iterable[Iterable[int]]) -> CoverFamily:
        uniq = {tuple(sorted(c)) for c in covers}
        return cls(n, tuple(sorted(uniq, key=support_sort_key)))

    def __len__(self) -> int:
        return len(self.covers)

    def __iter__(self):
        return iter(self.covers)

    def as_set(self) -> set[frozenset[int]]:
        return {frozenset(c) for c in self.covers}

    def primes(self) -> list[PrimeSupport]:
        return [PrimeSupport(self.n, c) for c in self.covers]

    def to_json(self) -> list[list[int]]:
        return [list(c) for c in self.covers]


def nt_split(n: int, t: int) -> tuple[int, int]:
    """``(a, b)`` with ``n = a*t + b`` and ``0 <= b < t``."""
    if t < 1 or n < t:
        raise ValueError(f"need 1 <= t <= n, got n={n}, t={t}")
    return divmod(n, t)


def binomial(n: int, k: int) -> int:
    """Binomial coefficient, zero outside ``0 <= k <= n``."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def _mask(xs: Iterable[int]) -> int:
    m = 0
    for i in xs:
        m |= 1 << i
    return m


def _unmask(m: int) -> tuple[int, ...]:
    out = []
    i = 0
    while m:
        if m & 1:
            out.append(i)
        m >>= 1
        i += 1
    return tuple(out)


def _minimal_masks(masks: Iterable[int]) -> list[int]:
    ms = sorted(set(masks), key=lambda m: bin(m).count("1"))
    kept: list[int] = []
    for m in ms:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return kept


def minimal_transversals(n: int, facets: Sequence[Sequence[int]]) -> CoverFamily:
    """Inclusion-minimal sets meeting every facet, by iterated expansion."""
    if not facets:
        raise ValueError("need at least one facet")
    fmasks = []
    for F in facets:
        if not F:
            raise ValueError("empty facet has no transversal")
        fmasks.append(_mask(F))
    partial = [1 << v for v in facets[0]]
    for fm in fmasks[1:]:
        grown = []
        for c in partial:
            if c & fm:
                grown.append(c)
            else:
                grown.extend(c | (1 << v) for v in _unmask(fm))
        partial = _minimal_masks(grown)
    return CoverFamily.build(n, (_unmask(c) for c in partial))


def minimal_covers(delta: SimplicialComplex) -> CoverFamily:
    return minimal_transversals(delta.n, delta.facets)


def brute_force_covers(delta: SimplicialComplex) -> CoverFamily:
    """Subset scan over all of ``2^[n]``; reference oracle only."""
    n = delta.n
    fmasks = [_mask(F) for F in delta.facets]
    covers = [m for m in range(1 << (n + 1)) if not m & 1 and all(m & f for f in fmasks)]
    cover_set = set(covers)
    minimal = [
        m for m in covers
        if not any((m & ~(1 << v)) in cover_set for v in _unmask(m))
    ]
    return CoverFamily.build(n, (_unmask(m) for m in minimal))


def cnt_member(F: Sequence[int], n: int, t: int) -> bool:
    """Whether ``F`` satisfies the six interval conditions characterizing minimal covers
    of ``Delta_{n,t}``; conditions over empty index ranges hold vacuously."""
    i = sorted(F)
    r = len(i)
    if r == 0 or i[0] < 1 or i[-1] > n:
        return False
    if not 1 <= i[0] <= t:
        return False
    if r >= 2 and not i[1] > t:
        return False
    if any(not 1 <= i[j + 1] - i[j] <= t for j in range(r - 1)):
        return False
    if any(not i[j + 2] - i[j] > t for j in range(r - 2)):
        return False
    if r >= 2 and not i[r - 2] < n - t + 1:
        return False
    return n - t + 1 <= i[r - 1] <= n


def cnt_family(n: int, t: int) -> CoverFamily:
    """All subsets of ``[n]`` passing :func:`cnt_member` (exhaustive scan)."""
    found = []
    for k in range(1, n + 1):
        for F in combinations(range(1, n + 1), k):
            if cnt_member(F, n, t):
                found.append(F)
    return CoverFamily.build(n, found)


def verify_minimal_primes(n: int, t: int) -> bool:
    return minimal_covers(facet_complex(n, t)).as_set() == cnt_family(n, t).as_set()


def height(I: MonomialIdeal) -> int:
    if I.is_zero():
        raise ValueError("height of the zero ideal is undefined here")
    if I.is_unit():
        raise ValueError("height of the unit ideal is undefined here")
    return min(len(c) for c in minimal_covers(complex_of_ideal(I)))


def m_grade(I: MonomialIdeal) -> int:
    """Largest number of minimal generators with pairwise disjoint supports."""
    if I.is_zero():
        raise ValueError("monomial grade of the zero ideal is undefined here")
    masks = [_mask(i for i, e in enumerate(g) if e) for g in I.gens]
    best = 0

    def search(start: int, used: int, size: int) -> None:
        nonlocal best
        if size + (len(masks) - start) <= best:
            return
        best = max(best, size)
        for j in range(start, len(masks)):
            if not masks[j] & used:
                search(j + 1, used | masks[j], size + 1)

    search(0, 0, 0)
    return best


# ---- interval sequences ----------------------------------------------------

def _interval_sequences(
    length: int, low, high, max_gap: int
) -> list[tuple[int, ...]]:
    """Strictly increasing sequences with ``low(j) <= i_j <= high(j)`` (1-based ``j``)
    and consecutive gaps at most ``max_gap``."""
    out: list[tuple[int, ...]] = []

    def extend(prefix: list[int]) -> None:
        j = len(prefix) + 1
        if j > length:
            out.append(tuple(prefix))
            return
        lo, hi = low(j), high(j)
        if prefix:
            lo = max(lo, prefix[-1] + 1)
            hi = min(hi, prefix[-1] + max_gap)
        for v in range(lo, hi + 1):
            prefix.append(v)
            extend(prefix)
            prefix.pop()

    extend([])
    return out


def enumerate_T(a: int, t: int) -> list[tuple[int, ...]]:
    """Sequences ``i_1 < ... < i_a`` with ``(j-1)t+1 <= i_j <= jt`` and gaps at most ``t``.

    ``t = 0`` is accepted (the set is empty unless ``a = 0``) because the
    induction that counts these sets passes through it.
    """
    if a < 0 or t < 0:
        raise ValueError(f"need a >= 0 and t >= 0, got a={a}, t={t}")
    return _interval_sequences(a, lambda j: (j - 1) * t + 1, lambda j: j * t, t)


def enumerate_X(n: int, t: int) -> list[tuple[int, ...]]:
    """Sequences of length ``a`` with ``(j-1)t+b+1 <= i_j <= jt`` and gaps at most ``t``,
    where ``n = a*t + b``.  These index the height-``a`` minimal primes."""
    a, b = nt_split(n, t)
    return _interval_sequences(a, lambda j: (j - 1) * t + b + 1, lambda j: j * t, t)


def tau_index(seq: Sequence[int], t: int) -> int:
    """Least ``j`` with ``i_j = (j-1)t + 1``, or ``len(seq) + 1`` if there is none."""
    for j, v in enumerate(seq, start=1):
        if v == (j - 1) * t + 1:
            return j
    return len(seq) + 1


def enumerate_T_prefix(k: int, t: int) -> list[tuple[int, ...]]:
    """Length ``k-1`` sequences with ``(j-1)t+2 <= i_j <= jt`` and gaps at most ``t``."""
    return _interval_sequences(k - 1, lambda j: (j - 1) * t + 2, lambda j: j * t, t)


def shift_by_index(seq: Sequence[int], step: int = 1) -> tuple[int, ...]:
    """``i_j -> i_j - step*j``; with ``step = 1`` it carries the prefix sets for ``t``
    onto ``T_{k-1, t-1}``, with ``step = b`` it carries ``X_{n,t}`` onto ``T_{a, t-b}``."""
    return tuple(v - step * j for j, v in enumerate(seq, start=1))


def unshift_by_index(seq: Sequence[int], step: int = 1) -> tuple[int, ...]:
    return tuple(v + step * j for j, v in enumerate(seq, start=1))


def verify_T_count(a: int, t: int) -> bool:
    """Exhaustive check of ``|T_{a,t}| = C(a+t-1, a)`` together with the counting
    argument: the classes of equal ``tau_index`` correspond to the prefix sets,
    which the index shift carries bijectively onto ``T_{k-1,t-1}``."""
    T = enumerate_T(a, t)
    if len(T) != binomial(a + t - 1, a) or len(set(T)) != len(T):
        return False
    if t == 1:
        return T == [tuple(range(1, a + 1))]
    for k in range(1, a + 2):
        cls = [s for s in T if tau_index(s, t) == k]
        prefixes = [s[: k - 1] for s in cls]
        target = enumerate_T_prefix(k, t)
        if sorted(prefixes) != sorted(target) or len(set(prefixes)) != len(cls):
            return False
        # the tail after the first anchored index is forced
        for s in cls:
            if any(s[j - 1] != (j - 1) * t + 1 for j in range(k, a + 1)):
                return False
        if not _is_bijection(target, enumerate_T(k - 1, t - 1), shift_by_index, unshift_by_index, 1):
            return False
    return True


def verify_X_count(n: int, t: int) -> bool:
    """``|X_{n,t}| = C(a+t-b-1, a)`` with ``i_j -> i_j - b*j`` a bijection onto ``T_{a,t-b}``."""
    a, b = nt_split(n, t)
    X = enumerate_X(n, t)
    if len(X) != binomial(a + t - b - 1, a):
        return False
    return _is_bijection(X, enumerate_T(a, t - b), shift_by_index, unshift_by_index, b)


def _is_bijection(src, dst, fwd, back, step) -> bool:
    src_set, dst_set = set(src), set(dst)
    image = {fwd(s, step) for s in src_set}
    if image != dst_set or len(image) != len(src_set):
        return False
    return all(back(fwd(s, step), step) == s for s in src_set)


# ---- minimal primes of minimal height -------------------------------------

def height_a_conditions(F: Sequence[int], n: int, t: int) -> bool:
    """Interval conditions for an ``a``-subset to be a minimal prime of height ``a``."""
    a, b = nt_split(n, t)
    i = sorted(F)
    if len(i) != a:
        return False
    if any(not (j - 1) * t + b + 1 <= v <= j * t for j, v in enumerate(i, start=1)):
        return False
    return all(i[j + 1] - i[j] <= t for j in range(a - 1))


def min_height_primes(n: int, t: int) -> CoverFamily:
    a, _ = nt_split(n, t)
    covers = minimal_covers(facet_complex(n, t))
    fam = CoverFamily.build(n, (c for c in covers if len(c) == a))
    by_conditions = {
        frozenset(F) for F in combinations(range(1, n + 1), a) if height_a_conditions(F, n, t)
    }
    if fam.as_set() != by_conditions:
        raise AssertionError(f"height-{a} covers of Delta_{{{n},{t}}} disagree with interval conditions")
    return fam


def multiplicity_squarefree(n: int, t: int) -> int:
    a, b = nt_split(n, t)
    count = len(min_height_primes(n, t))
    expected = binomial(a + t - b - 1, a)
    if count != expected:
        raise AssertionError(f"count {count} != C({a + t - b - 1}, {a}) = {expected}")
    return count


def squarefree_multiplicity_formula(n: int, t: int) -> int:
    a, b = nt_split(n, t)
    return binomial(a + t - b - 1, a)
