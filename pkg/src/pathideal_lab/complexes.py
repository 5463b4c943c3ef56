"""Path ideals of line graphs and simplicial complexes given by facets."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .monomial import Monomial, MonomialIdeal, minimalize, radical

FOREST_FACET_CAP = 20


@dataclass(frozen=True)
class SimplicialComplex:
    """Complex on vertex set ``[n]`` described by its facets (sorted tuples)."""

    n: int
    facets: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        fs = []
        for F in self.facets:
            F = tuple(sorted(set(F)))
            if not F:
                raise ValueError("facets must be nonempty")
            if F[0] < 1 or F[-1] > self.n:
                raise ValueError(f"facet {F} not inside [1..{self.n}]")
            fs.append(F)
        fs = sorted(set(fs))
        sets = [frozenset(F) for F in fs]
        for i, A in enumerate(sets):
            for j, B in enumerate(sets):
                if i != j and A < B:
                    raise ValueError(f"facet {fs[i]} is contained in facet {fs[j]}")
        object.__setattr__(self, "facets", tuple(fs))

    @classmethod
    def from_faces(cls, n: int, faces: Iterable[Iterable[int]]) -> SimplicialComplex:
        """Complex generated by ``faces``; non-maximal ones are dropped."""
        sets = {frozenset(f) for f in faces if f}
        maximal = [F for F in sets if not any(F < G for G in sets)]
        return cls(n, tuple(tuple(sorted(F)) for F in maximal))

    def is_face(self, sigma: Iterable[int]) -> bool:
        s = set(sigma)
        return any(s <= set(F) for F in self.facets)

    def to_json(self) -> dict:
        return {"n": self.n, "facets": [list(F) for F in self.facets]}

    @classmethod
    def from_json(cls, data: dict) -> SimplicialComplex:
        return cls(int(data["n"]), tuple(tuple(F) for F in data["facets"]))


def _check_nt(n: int, t: int) -> None:
    if t < 1 or t > n:
        raise ValueError(f"need 1 <= t <= n, got n={n}, t={t}")


def path_ideal(n: int, t: int) -> MonomialIdeal:
    """``I_t(L_n)``, generated by ``x_i x_{i+1} ... x_{i+t-1}``."""
    _check_nt(n, t)
    gens = [Monomial.from_support(range(i, i + t), n) for i in range(1, n - t + 2)]
    return minimalize(gens, n)


def path_ideal_in(m: int, t: int, ambient: int) -> MonomialIdeal:
    """``I_t(L_m)`` inside ``K[x1..x_ambient]``; the zero ideal when ``m < t``."""
    if ambient < max(m, 0):
        raise ValueError("ambient ring too small")
    if m < t:
        return MonomialIdeal.zero(ambient)
    gens = [Monomial.from_support(range(i, i + t), ambient) for i in range(1, m - t + 2)]
    return minimalize(gens, ambient)


def facet_complex(n: int, t: int) -> SimplicialComplex:
    """``Delta_{n,t}`` with facets ``{i, ..., i+t-1}``."""
    _check_nt(n, t)
    return SimplicialComplex(n, tuple(tuple(range(i, i + t)) for i in range(1, n - t + 2)))


def facet_ideal(delta: SimplicialComplex) -> MonomialIdeal:
    return MonomialIdeal.from_supports(delta.n, delta.facets)


def complex_of_ideal(I: MonomialIdeal) -> SimplicialComplex:
    """The complex whose facet ideal is the radical of ``I`` (facets = generator supports)."""
    if I.is_zero():
        raise ValueError("the zero ideal has no facet complex")
    if I.is_unit():
        raise ValueError("the unit ideal has no facet complex")
    rad = radical(I)
    return SimplicialComplex(
        I.ambient, tuple(tuple(i + 1 for i, e in enumerate(g) if e) for g in rad.gens)
    )


def minimal_nonfaces(delta: SimplicialComplex) -> list[tuple[int, ...]]:
    """Inclusion-minimal subsets of ``[n]`` lying in no facet, by ascending size."""
    facets = [frozenset(F) for F in delta.facets]
    found: list[frozenset[int]] = []
    for k in range(1, delta.n + 1):
        for sigma in combinations(range(1, delta.n + 1), k):
            s = frozenset(sigma)
            if any(f <= s for f in found):
                continue
            if not any(s <= F for F in facets):
                found.append(s)
    return [tuple(sorted(s)) for s in found]


def stanley_reisner_ideal(delta: SimplicialComplex) -> MonomialIdeal:
    return MonomialIdeal.from_supports(delta.n, minimal_nonfaces(delta))


def _facet_index(delta: SimplicialComplex, F: Sequence[int]) -> int:
    F = tuple(sorted(F))
    try:
        return delta.facets.index(F)
    except ValueError:
        raise ValueError(f"{F} is not a facet") from None


def is_leaf(delta: SimplicialComplex, F: Sequence[int]) -> bool:
    """``F`` is the only facet, or some other facet ``G`` contains ``H & F`` for every ``H != F``."""
    idx = _facet_index(delta, F)
    if len(delta.facets) == 1:
        return True
    Fs = set(delta.facets[idx])
    others = [set(H) for j, H in enumerate(delta.facets) if j != idx]
    for G in others:
        GF = G & Fs
        if all(H & Fs <= GF for H in others):
            return True
    return False


def is_good_leaf(delta: SimplicialComplex, F: Sequence[int]) -> bool:
    """A leaf whose intersections with all facets form a chain under inclusion."""
    if not is_leaf(delta, F):
        return False
    Fs = set(F)
    inters = sorted({frozenset(Fs & set(H)) for H in delta.facets}, key=len)
    return all(a <= b for a, b in zip(inters, inters[1:]))


def is_connected(delta: SimplicialComplex) -> bool:
    if not delta.facets:
        return True
    seen = {0}
    stack = [0]
    sets = [set(F) for F in delta.facets]
    while stack:
        i = stack.pop()
        for j, G in enumerate(sets):
            if j not in seen and sets[i] & G:
                seen.add(j)
                stack.append(j)
    return len(seen) == len(sets)


def is_simplicial_forest(delta: SimplicialComplex, cap: int = FOREST_FACET_CAP) -> bool:
    """Every nonempty subcollection of facets has a leaf (exhaustive check)."""
    m = len(delta.facets)
    if m > cap:
        raise ValueError(f"forest check limited to {cap} facets, complex has {m}")
    for k in range(1, m + 1):
        for sub in combinations(delta.facets, k):
            sub_complex = SimplicialComplex(delta.n, sub)
            if not any(is_leaf(sub_complex, F) for F in sub_complex.facets):
                return False
    return True


def is_simplicial_tree(delta: SimplicialComplex) -> bool:
    return is_connected(delta) and is_simplicial_forest(delta)
