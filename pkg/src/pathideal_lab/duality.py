"""Alexander duality for squarefree monomial ideals."""

from __future__ import annotations

from .complexes import complex_of_ideal, path_ideal
from .covers import minimal_covers
from .monomial import MonomialIdeal


def dual(I: MonomialIdeal) -> MonomialIdeal:
    """``I^vee``, generated by ``x_C`` over the minimal vertex covers ``C`` of the
    complex whose facets are the generator supports of ``I``."""
    if not I.is_squarefree():
        raise ValueError("Alexander dual needs a squarefree ideal")
    if I.is_zero() or I.is_unit():
        raise ValueError("Alexander dual needs a nonzero proper ideal")
    covers = minimal_covers(complex_of_ideal(I))
    return MonomialIdeal.from_supports(I.ambient, covers.covers)


def deg_max(I: MonomialIdeal) -> int:
    """Largest total degree of a minimal generator."""
    if I.is_zero():
        raise ValueError("the zero ideal has no generators")
    return max(sum(g) for g in I.gens)


def deg_formula(n: int, t: int) -> int:
    """Closed form for ``deg_max`` of the dual path ideal: ``n = (t+1)p + q``."""
    p, q = divmod(n, t + 1)
    return 2 * p + 1 if q == t else 2 * p


def verify_deg_formula(n: int, t: int) -> bool:
    return deg_max(dual(path_ideal(n, t))) == deg_formula(n, t)
