"""Locally repairable codes with optimal distance, built from good polynomials."""

from .errors import LrcError
from .gf import GF, FieldElement, field_create
from .poly import Poly, dickson, distinct_roots, interpolate, poly_gcd
from .goodpoly import (
    GoodPolyCert,
    cert_from_poly,
    compute_G,
    compute_Nf,
    construct_additive,
    construct_cubic_shifted,
    construct_dickson,
    construct_multiplicative,
    construct_union_cosets,
    verify_cert,
)
from .lrc import (
    CodeInstance,
    LrcParams,
    construct,
    congruence_condition,
    improved_bound,
    singleton_bound,
    validate,
)
from .analysis import (
    locality_check,
    min_distance_exhaustive,
    min_distance_sampled,
    poly_to_message,
    repair,
    witness_low_weight,
)

__all__ = [
    "LrcError", "GF", "FieldElement", "field_create",
    "Poly", "dickson", "distinct_roots", "interpolate", "poly_gcd",
    "GoodPolyCert", "cert_from_poly", "compute_G", "compute_Nf", "construct_additive",
    "construct_cubic_shifted", "construct_dickson", "construct_multiplicative",
    "construct_union_cosets", "verify_cert",
    "CodeInstance", "LrcParams", "construct", "congruence_condition", "improved_bound",
    "singleton_bound", "validate",
    "locality_check", "min_distance_exhaustive", "min_distance_sampled", "poly_to_message",
    "repair", "witness_low_weight",
]
__version__ = "0.1.0"
