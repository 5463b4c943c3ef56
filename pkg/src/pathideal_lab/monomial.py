"""Exact arithmetic on monomials and monomial ideals.

A monomial in ``K[x1, ..., xn]`` is stored as its exponent vector.  Ideals
keep a minimal generating set in a fixed canonical order (ascending total
degree, then lexicographic with ``x1 > x2 > ... > xn``), so two ideals are
equal exactly when their generator tuples are equal.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

Exps = tuple[int, ...]

# exponents are bounded as if stored in a signed 64-bit word
MAX_EXPONENT = 2**63 - 1


class AmbientMismatch(ValueError):
    """Raised when objects from polynomial rings of different sizes are mixed."""


def _check_exps(exps: Exps) -> None:
    for e in exps:
        if e < 0:
            raise ValueError(f"negative exponent in {exps}")
        if e > MAX_EXPONENT:
            raise OverflowError(f"exponent {e} exceeds {MAX_EXPONENT}")


def order_key(exps: Exps) -> tuple:
    return (sum(exps), tuple(-e for e in exps))


def exps_divides(a: Exps, b: Exps) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def exps_lcm(a: Exps, b: Exps) -> Exps:
    return tuple(x if x > y else y for x, y in zip(a, b))


def exps_mul(a: Exps, b: Exps) -> Exps:
    out = tuple(x + y for x, y in zip(a, b))
    if any(e > MAX_EXPONENT for e in out):
        raise OverflowError("exponent overflow in monomial product")
    return out


def exps_quotient_by_gcd(g: Exps, m: Exps) -> Exps:
    """``g / gcd(g, m)``, the generator of ``(g) : m``."""
    return tuple(x - y if x > y else 0 for x, y in zip(g, m))


def _divisors_of_degree(c: Exps, drop: int, limit: int) -> list[Exps] | None:
    """Divisors of ``c`` whose degree is ``deg(c) - drop``; ``None`` once more than
    ``limit`` of them would be produced."""
    out: list[Exps] = []
    n = len(c)
    # suffix capacity: how much degree can still be removed from positions j..n-1
    cap = [0] * (n + 1)
    for j in range(n - 1, -1, -1):
        cap[j] = cap[j + 1] + c[j]
    cur = list(c)

    def rec(j: int, left: int) -> bool:
        if left == 0:
            out.append(tuple(cur))
            return len(out) <= limit
        if j == n or cap[j] < left:
            return True
        top = min(c[j], left)
        for k in range(top, -1, -1):
            cur[j] = c[j] - k
            if not rec(j + 1, left - k):
                cur[j] = c[j]
                return False
        cur[j] = c[j]
        return True

    return out if rec(0, drop) else None


def minimal_exps(gens: Iterable[Exps]) -> tuple[Exps, ...]:
    """Minimal elements (under divisibility) of a set of exponent vectors, canonically sorted."""
    cands = sorted(set(gens), key=order_key)
    if not cands:
        return ()
    kept: list[Exps] = []
    # kept generators grouped by degree; only strictly lower degrees can divide
    by_deg: dict[int, tuple[list[Exps], set[Exps]]] = {}
    for c in cands:
        d = sum(c)
        redundant = False
        for k, (lst, bag) in by_deg.items():
            if k >= d:
                continue
            divs = _divisors_of_degree(c, d - k, len(lst) // 4)
            if divs is None:
                redundant = any(exps_divides(g, c) for g in lst)
            else:
                redundant = any(v in bag for v in divs)
            if redundant:
                break
        if not redundant:
            kept.append(c)
            entry = by_deg.get(d)
            if entry is None:
                by_deg[d] = ([c], {c})
            else:
                entry[0].append(c)
                entry[1].add(c)
    return tuple(kept)


@dataclass(frozen=True, slots=True)
class Monomial:
    exps: Exps

    def __post_init__(self) -> None:
        if not isinstance(self.exps, tuple):
            object.__setattr__(self, "exps", tuple(self.exps))
        _check_exps(self.exps)

    @classmethod
    def one(cls, n: int) -> Monomial:
        return cls((0,) * n)

    @classmethod
    def var(cls, i: int, n: int, power: int = 1) -> Monomial:
        """The monomial ``x_i^power`` (1-based index)."""
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} outside 1..{n}")
        e = [0] * n
        e[i - 1] = power
        return cls(tuple(e))

    @classmethod
    def from_support(cls, support: Iterable[int], n: int) -> Monomial:
        """The squarefree monomial ``x_F``."""
        e = [0] * n
        for i in support:
            if not 1 <= i <= n:
                raise ValueError(f"variable index {i} outside 1..{n}")
            e[i - 1] = 1
        return cls(tuple(e))

    @property
    def ambient(self) -> int:
        return len(self.exps)

    @property
    def degree(self) -> int:
        return sum(self.exps)

    def support(self) -> frozenset[int]:
        return frozenset(i + 1 for i, e in enumerate(self.exps) if e)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exps)

    def is_pure_power(self) -> bool:
        return sum(1 for e in self.exps if e) <= 1

    def __mul__(self, other: Monomial) -> Monomial:
        _same_ambient(self, other)
        return Monomial(exps_mul(self.exps, other.exps))

    def __str__(self) -> str:
        return format_monomial(self.exps)


def _same_ambient(a, b) -> None:
    if a.ambient != b.ambient:
        raise AmbientMismatch(f"ambient {a.ambient} vs {b.ambient}")


def divides(m1: Monomial, m2: Monomial) -> bool:
    _same_ambient(m1, m2)
    return exps_divides(m1.exps, m2.exps)


def lcm(m1: Monomial, m2: Monomial) -> Monomial:
    _same_ambient(m1, m2)
    return Monomial(exps_lcm(m1.exps, m2.exps))


@dataclass(frozen=True, slots=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators.

    Construct through :func:`minimalize` or :meth:`from_exps`; the raw
    constructor trusts that ``gens`` is already minimal and sorted.
    """

    ambient: int
    gens: tuple[Exps, ...]

    @classmethod
    def from_exps(cls, n: int, gens: Iterable[Sequence[int]]) -> MonomialIdeal:
        checked = []
        for g in gens:
            g = tuple(g)
            if len(g) != n:
                raise AmbientMismatch(f"exponent vector {g} not of length {n}")
            _check_exps(g)
            checked.append(g)
        return cls(n, minimal_exps(checked))

    @classmethod
    def zero(cls, n: int) -> MonomialIdeal:
        return cls(n, ())

    @classmethod
    def unit(cls, n: int) -> MonomialIdeal:
        return cls(n, ((0,) * n,))

    @classmethod
    def from_supports(cls, n: int, supports: Iterable[Iterable[int]]) -> MonomialIdeal:
        return minimalize([Monomial.from_support(F, n) for F in supports], n)

    def monomials(self) -> list[Monomial]:
        return [Monomial(g) for g in self.gens]

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return any(sum(g) == 0 for g in self.gens)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.gens for e in g)

    def __len__(self) -> int:
        return len(self.gens)

    def __str__(self) -> str:
        return format_ideal(self)

    def __add__(self, other: MonomialIdeal) -> MonomialIdeal:
        return ideal_sum(self, other)

    def __mul__(self, other: MonomialIdeal) -> MonomialIdeal:
        return product(self, other)

    def __pow__(self, s: int) -> MonomialIdeal:
        return power(self, s)


@dataclass(frozen=True, slots=True, order=True)
class PrimeSupport:
    """Index set ``F`` of the monomial prime ``(x_i : i in F)``."""

    ambient: int
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        m = tuple(self.members)
        object.__setattr__(self, "members", m)
        if any(b <= a for a, b in zip(m, m[1:])):
            raise ValueError(f"prime support {m} is not strictly increasing")
        if m and (m[0] < 1 or m[-1] > self.ambient):
            raise ValueError(f"prime support {m} not inside [1..{self.ambient}]")

    @classmethod
    def of(cls, members: Iterable[int], n: int) -> PrimeSupport:
        return cls(n, tuple(sorted(set(members))))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def to_ideal(self) -> MonomialIdeal:
        return MonomialIdeal.from_exps(
            self.ambient, [Monomial.var(i, self.ambient).exps for i in self.members]
        )


def support_sort_key(members: Sequence[int]) -> tuple:
    """Order of prime supports: by cardinality, then lexicographically."""
    return (len(members), tuple(members))


def minimalize(gens: Iterable[Monomial], n: int | None = None) -> MonomialIdeal:
    gens = list(gens)
    if n is None:
        if not gens:
            raise ValueError("ambient size needed to build the zero ideal")
        n = gens[0].ambient
    for g in gens:
        if g.ambient != n:
            raise AmbientMismatch(f"monomial {g} not in ambient {n}")
    return MonomialIdeal(n, minimal_exps(g.exps for g in gens))


def _check_pair(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.ambient != J.ambient:
        raise AmbientMismatch(f"ambient {I.ambient} vs {J.ambient}")


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_pair(I, J)
    return MonomialIdeal(I.ambient, minimal_exps(I.gens + J.gens))


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_pair(I, J)
    prods = {exps_mul(g, h) for g in I.gens for h in J.gens}
    return MonomialIdeal(I.ambient, minimal_exps(prods))


def power(I: MonomialIdeal, s: int) -> MonomialIdeal:
    if s < 0:
        raise ValueError("negative power")
    result = MonomialIdeal.unit(I.ambient)
    for _ in range(s):
        result = product(result, I)
    return result


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_pair(I, J)
    return MonomialIdeal(I.ambient, minimal_exps(exps_lcm(g, h) for g in I.gens for h in J.gens))


def colon_monomial(I: MonomialIdeal, m: Monomial | Exps) -> MonomialIdeal:
    e = m.exps if isinstance(m, Monomial) else m
    if len(e) != I.ambient:
        raise AmbientMismatch(f"divisor has ambient {len(e)}, ideal {I.ambient}")
    return MonomialIdeal(I.ambient, minimal_exps(exps_quotient_by_gcd(g, e) for g in I.gens))


def colon(I: MonomialIdeal, J: MonomialIdeal | Monomial) -> MonomialIdeal:
    """``I : J``; for an ideal, the intersection of ``I : g`` over generators of ``J``."""
    if isinstance(J, Monomial):
        return colon_monomial(I, J)
    _check_pair(I, J)
    if J.is_zero():
        raise ValueError("colon by the zero ideal")
    result = None
    for g in J.gens:
        part = colon_monomial(I, g)
        result = part if result is None else intersect(result, part)
    return result


def contains(I: MonomialIdeal, m: Monomial) -> bool:
    if m.ambient != I.ambient:
        raise AmbientMismatch(f"monomial ambient {m.ambient}, ideal {I.ambient}")
    return any(exps_divides(g, m.exps) for g in I.gens)


def is_subideal(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """True iff ``I`` is contained in ``J``."""
    _check_pair(I, J)
    return all(any(exps_divides(h, g) for h in J.gens) for g in I.gens)


def radical(I: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(
        I.ambient, minimal_exps(tuple(1 if e else 0 for e in g) for g in I.gens)
    )


def support(I: MonomialIdeal) -> frozenset[int]:
    return frozenset(i + 1 for g in I.gens for i, e in enumerate(g) if e)


def equals(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    _check_pair(I, J)
    return I.gens == J.gens


def embed(I: MonomialIdeal, n: int) -> MonomialIdeal:
    """View an ideal of ``K[x1..xm]`` inside ``K[x1..xn]`` for ``n >= m``."""
    if n < I.ambient:
        raise AmbientMismatch(f"cannot embed ambient {I.ambient} into {n}")
    pad = (0,) * (n - I.ambient)
    return MonomialIdeal(n, tuple(g + pad for g in I.gens))


def permute_variables(I: MonomialIdeal, perm: Sequence[int]) -> MonomialIdeal:
    """Relabel ``x_i`` as ``x_{perm[i-1]}`` (``perm`` is a permutation of 1..n)."""
    n = I.ambient
    if sorted(perm) != list(range(1, n + 1)):
        raise ValueError(f"{perm} is not a permutation of 1..{n}")
    out = []
    for g in I.gens:
        e = [0] * n
        for i, x in enumerate(g):
            e[perm[i] - 1] = x
        out.append(tuple(e))
    return MonomialIdeal(n, minimal_exps(out))


# ---- text format -------------------------------------------------------------

def format_monomial(exps: Exps) -> str:
    parts = []
    for i, e in enumerate(exps, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) if parts else "1"


def format_ideal(I: MonomialIdeal) -> str:
    return "[" + ", ".join(format_monomial(g) for g in I.gens) + "]"


_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str, n: int) -> Monomial:
    text = text.strip()
    if text == "1":
        return Monomial.one(n)
    e = [0] * n
    for factor in text.split("*"):
        match = _FACTOR.match(factor.strip())
        if not match:
            raise ValueError(f"cannot parse monomial factor {factor!r}")
        i = int(match.group(1))
        if not 1 <= i <= n:
            raise ValueError(f"variable x{i} outside ambient {n}")
        e[i - 1] += int(match.group(2) or 1)
    return Monomial(tuple(e))


def parse_ideal(text: str, n: int) -> MonomialIdeal:
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ValueError(f"ideal must be a bracketed list, got {text!r}")
    body = text[1:-1].strip()
    if not body:
        return MonomialIdeal.zero(n)
    return minimalize([parse_monomial(p, n) for p in body.split(",")], n)
