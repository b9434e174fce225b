"""Coefficient domains, polynomials, rational functions, 3x3 matrices, jets."""

from .rational import QQ, ZZ, rat, is_exact, as_float, HAVE_GMPY2
from .poly import Polynomial, poly_gcd, poly_lcm, poly_to_json, poly_from_json
from .ratfun import RationalFunction
from .mat3 import Mat3
from .jet import Jet, jet_lift, DEFAULT_ORDER
from .roots import poly_roots, MAX_DEGREE, RESIDUAL_BOUND

__all__ = [
    "QQ", "ZZ", "rat", "is_exact", "as_float", "HAVE_GMPY2",
    "Polynomial", "poly_gcd", "poly_lcm", "poly_to_json", "poly_from_json",
    "RationalFunction", "Mat3", "Jet", "jet_lift", "DEFAULT_ORDER",
    "poly_roots", "MAX_DEGREE", "RESIDUAL_BOUND",
]
