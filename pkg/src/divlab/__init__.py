"""Exact polynomial divisibility over integer-like rings."""

__version__ = "0.1.0"

from .errors import DivlabError, FactorizationIncomplete
from .expr import format_poly, parse_poly
from .lab import (
    SamplePlan,
    dring_quotient,
    epp_verdict,
    int_membership,
    ipp_witnesses,
    scan_divisibility,
    sum_two_squares,
    unit_valued_scan,
)
from .lucas import congruence_check, lucas_eval, lucas_poly, pell_fundamental, pell_verify
from .numtheory import factorize, is_probable_prime
from .poly import (
    Poly,
    PolyTower,
    conj_poly,
    content,
    divides_exact,
    divides_in_fraction_field,
    norm_poly,
    poly_eval,
    primitive_part,
    pseudo_divide,
)
from .rings import QQ, ZZ, DenominatorSet, Localized, Quad, Quadratic, quad_conj, quad_norm, ring_divides, ring_is_unit


__all__ = [
    "congruence_check",
    "conj_poly",
    "content",
    "DenominatorSet",
    "divides_exact",
    "divides_in_fraction_field",
    "DivlabError",
    "dring_quotient",
    "epp_verdict",
    "FactorizationIncomplete",
    "factorize",
    "format_poly",
    "int_membership",
    "ipp_witnesses",
    "is_probable_prime",
    "Localized",
    "lucas_eval",
    "lucas_poly",
    "norm_poly",
    "parse_poly",
    "pell_fundamental",
    "pell_verify",
    "Poly",
    "poly_eval",
    "PolyTower",
    "primitive_part",
    "pseudo_divide",
    "QQ",
    "Quad",
    "quad_conj",
    "quad_norm",
    "Quadratic",
    "ring_divides",
    "ring_is_unit",
    "SamplePlan",
    "scan_divisibility",
    "sum_two_squares",
    "unit_valued_scan",
    "ZZ",
]
