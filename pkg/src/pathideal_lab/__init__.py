"""Exact commutative-algebra computations for path ideals of line graphs."""

from .complexes import SimplicialComplex, facet_complex, path_ideal
from .covers import CoverFamily, cnt_family, height, m_grade, minimal_covers
from .decomposition import associated_primes, irreducible_decomposition, local_length
from .duality import dual
from .hilbert import k_polynomial, multiplicity, mult_formula, path_power, q_polynomial
from .monomial import Monomial, MonomialIdeal, format_ideal, parse_ideal
from .polynomial import IntPolynomial

__version__ = "0.1.0"

__all__ = [
    "CoverFamily",
    "IntPolynomial",
    "Monomial",
    "MonomialIdeal",
    "SimplicialComplex",
    "associated_primes",
    "cnt_family",
    "dual",
    "facet_complex",
    "format_ideal",
    "height",
    "irreducible_decomposition",
    "k_polynomial",
    "local_length",
    "m_grade",
    "minimal_covers",
    "mult_formula",
    "multiplicity",
    "parse_ideal",
    "path_ideal",
    "path_power",
    "q_polynomial",
]
