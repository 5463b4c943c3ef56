"""Graded Betti numbers of squarefree monomial quotients via Hochster's formula."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from math import gcd
from typing import Iterable

from .complexes import SimplicialComplex, path_ideal
from .duality import dual
from .monomial import MonomialIdeal
from .polynomial import IntPolynomial

HOCHSTER_CAP = 12


def _mask(xs: Iterable[int]) -> int:
    m = 0
    for i in xs:
        m |= 1 << i
    return m


def _members(mask: int) -> tuple[int, ...]:
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)


def _squarefree_check(I: MonomialIdeal) -> None:
    if not I.is_squarefree():
        raise ValueError("Hochster's formula needs a squarefree ideal")
    if I.is_unit():
        raise ValueError("S/I is zero for the unit ideal")


def _gen_masks(I: MonomialIdeal) -> list[int]:
    return [_mask(i + 1 for i, e in enumerate(g) if e) for g in I.gens]


def stanley_reisner_complex(I: MonomialIdeal) -> SimplicialComplex:
    """The complex of all ``sigma`` with ``x_sigma`` outside ``I``.

    When ``I`` contains every variable only the empty face is left and the
    result has no facets.
    """
    _squarefree_check(I)
    n = I.ambient
    gm = _gen_masks(I)
    faces = []
    for k in range(1, n + 1):
        for sigma in combinations(range(1, n + 1), k):
            m = _mask(sigma)
            if not any(g & m == g for g in gm):
                faces.append(sigma)
    return SimplicialComplex.from_faces(n, faces)


# ---- exact rank -----------------------------------------------------------

def exact_rank(columns: list[dict[int, int]]) -> int:
    """Rank over the rationals of a sparse integer matrix given by columns.

    Fraction-free elimination: each reduction step combines two integer
    vectors and divides out the content, so entries never become fractions.
    """
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for col in columns:
        v = {k: x for k, x in col.items() if x}
        while v:
            lead = max(v)
            p = pivots.get(lead)
            if p is None:
                pivots[lead] = v
                rank += 1
                break
            a, b = p[lead], v[lead]
            g = gcd(a, b)
            fa, fb = a // g, b // g
            # v <- fa*v - fb*p cancels the leading entry
            w = {k: fa * x for k, x in v.items()}
            for k, x in p.items():
                y = w.get(k, 0) - fb * x
                if y:
                    w[k] = y
                else:
                    w.pop(k, None)
            if w:
                c = 0
                for x in w.values():
                    c = gcd(c, x)
                    if c == 1:
                        break
                if c > 1:
                    w = {k: x // c for k, x in w.items()}
            v = w
    return rank


def _faces_by_dim(face_masks: list[int]) -> dict[int, list[int]]:
    out: dict[int, list[int]] = {}
    for f in face_masks:
        out.setdefault(bin(f).count("1") - 1, []).append(f)
    for v in out.values():
        v.sort()
    return out


def _reduced_homology_from_faces(face_masks: list[int]) -> list[int]:
    """Reduced Betti numbers ``[h_{-1}, h_0, ..., h_top]`` of the complex with the
    given faces (which must include the empty face ``0``)."""
    by_dim = _faces_by_dim(face_masks)
    top = max(by_dim)
    index = {d: {f: i for i, f in enumerate(fs)} for d, fs in by_dim.items()}
    ranks = {}
    for d in range(0, top + 1):
        lower = index[d - 1]
        cols = []
        for f in by_dim[d]:
            col = {}
            verts = _members(f)
            for pos, v in enumerate(verts):
                col[lower[f & ~(1 << v)]] = -1 if pos % 2 else 1
            cols.append(col)
        ranks[d] = exact_rank(cols)
    dims = []
    for d in range(-1, top + 1):
        dims.append(len(by_dim[d]) - ranks.get(d, 0) - ranks.get(d + 1, 0))
    return dims


def reduced_homology_dims(gamma: SimplicialComplex, sigma: Iterable[int]) -> list[int]:
    """Reduced homology of ``gamma`` restricted to ``sigma`` over the rationals.

    Entry ``k + 1`` of the result is ``dim H~_k`` for ``k = -1, 0, ..., dim``.
    """
    s = _mask(sigma)
    facet_masks = [_mask(F) & s for F in gamma.facets]
    faces = {0}
    for fm in facet_masks:
        sub = fm
        while sub:
            faces.add(sub)
            sub = (sub - 1) & fm
    return _reduced_homology_from_faces(sorted(faces))


# ---- Betti tables ---------------------------------------------------------

@dataclass
class BettiTable:
    """Nonzero graded Betti numbers ``beta_{i,j}`` of ``S/I``."""

    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def add(self, i: int, j: int, value: int) -> None:
        if value:
            self.entries[(i, j)] = self.entries.get((i, j), 0) + value

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def projective_dimension(self) -> int:
        return max(i for i, _ in self.entries)

    def regularity(self) -> int:
        """``max(j - i)``, the regularity of the quotient ``S/I``."""
        return max(j - i for i, j in self.entries)

    def k_polynomial(self) -> IntPolynomial:
        top = max(j for _, j in self.entries)
        coeffs = [0] * (top + 1)
        for (i, j), b in self.entries.items():
            coeffs[j] += (-1) ** i * b
        return IntPolynomial(tuple(coeffs))

    def to_json(self) -> dict[str, int]:
        return {f"{i},{j}": b for (i, j), b in sorted(self.entries.items())}

    def to_markdown(self) -> str:
        """Macaulay-style table: column ``i``, row ``j - i``."""
        pd = self.projective_dimension()
        reg = self.regularity()
        header = "|       | " + " | ".join(str(i) for i in range(pd + 1)) + " |"
        rule = "|---" * (pd + 2) + "|"
        totals = [sum(b for (i, _), b in self.entries.items() if i == c) for c in range(pd + 1)]
        lines = [header, rule, "| total | " + " | ".join(map(str, totals)) + " |"]
        for r in range(reg + 1):
            row = [self[(i, i + r)] for i in range(pd + 1)]
            cells = [str(b) if b else "." for b in row]
            lines.append(f"| {r}: | " + " | ".join(cells) + " |")
        return "\n".join(lines)


def _restriction_faces(face_set: list[int], sigma: int) -> list[int]:
    return [f for f in face_set if f & sigma == f]


def betti_table(I: MonomialIdeal, cap: int = HOCHSTER_CAP) -> BettiTable:
    """``beta_{i,j}(S/I) = sum over |sigma| = j of dim H~_{j-i-1}`` of the Stanley-Reisner
    complex restricted to ``sigma``."""
    _squarefree_check(I)
    n = I.ambient
    if n > cap:
        raise ValueError(f"Hochster scan limited to n <= {cap}, got n={n}")
    table = BettiTable()
    if I.is_zero():
        table.add(0, 0, 1)
        return table
    gm = _gen_masks(I)
    full = _mask(range(1, n + 1))
    faces = [m for m in range(0, full + 1, 2) if not any(g & m == g for g in gm)]
    for sigma in range(0, full + 1, 2):
        # a vertex of sigma lying in no generator support inside sigma is a cone
        # point of the restriction, which is then acyclic
        covered = 0
        for g in gm:
            if g & sigma == g:
                covered |= g
        if covered != sigma:
            continue
        j = bin(sigma).count("1")
        dims = _reduced_homology_from_faces(_restriction_faces(faces, sigma))
        for pos, h in enumerate(dims):
            k = pos - 1
            table.add(j - k - 1, j, h)
    return table


def projective_dimension(I: MonomialIdeal) -> int:
    """Projective dimension of ``S/I``."""
    return betti_table(I).projective_dimension()


def regularity(I: MonomialIdeal) -> int:
    """Castelnuovo-Mumford regularity of the ideal ``I`` (one more than that of ``S/I``)."""
    table = betti_table(I)
    shifted = [j - i + 1 for (i, j) in table.entries if i >= 1]
    if not shifted:
        raise ValueError("the zero ideal has no regularity")
    return max(shifted)


def pd_formula(n: int, t: int) -> int:
    """Closed form of ``pd(S/I_t(L_n))`` with ``n = (t+1)p + q``."""
    p, q = divmod(n, t + 1)
    return 2 * p + 1 if q == t else 2 * p


def verify_pd(n: int, t: int) -> tuple[int, int, int]:
    """``(Hochster pd, closed form, regularity of the dual)`` for ``I_t(L_n)``."""
    I = path_ideal(n, t)
    return projective_dimension(I), pd_formula(n, t), regularity(dual(I))


def betti_json(I: MonomialIdeal) -> str:
    return json.dumps(betti_table(I).to_json(), sort_keys=True)
