"""Exact scalars (rationals, cyclotomic fields) and sparse polynomials."""

from fractions import Fraction

from .cyclotomic import (
    Cyclotomic,
    GaloisMap,
    cyclotomic_polynomial,
    cyclotomic_reduce,
    euler_phi,
    galois_apply,
)
from .poly import (
    MultiPoly,
    as_scalar,
    binary_form_common_root,
    binary_forms_common_root,
    poly_compose_linear,
    poly_substitute,
)
from .rational import (
    cubic_discriminant,
    integer_root,
    rational_cube_root,
    rational_root,
    rational_roots,
    sextic_reducibility_criterion,
)

Rational = Fraction

__all__ = [
    "Cyclotomic",
    "Fraction",
    "GaloisMap",
    "MultiPoly",
    "Rational",
    "as_scalar",
    "binary_form_common_root",
    "binary_forms_common_root",
    "cubic_discriminant",
    "cyclotomic_polynomial",
    "cyclotomic_reduce",
    "euler_phi",
    "galois_apply",
    "integer_root",
    "poly_compose_linear",
    "poly_substitute",
    "rational_cube_root",
    "rational_root",
    "rational_roots",
    "sextic_reducibility_criterion",
]
