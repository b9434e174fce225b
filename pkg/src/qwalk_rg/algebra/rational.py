"""Exact rational scalars.

Uses gmpy2.mpq when available (much faster for the large coefficients the
symbolic RG produces), falling back to fractions.Fraction. Both expose
.numerator/.denominator and full arithmetic, so the rest of the algebra
layer does not care which one is active.
"""

from __future__ import annotations

from fractions import Fraction

try:
    from gmpy2 import mpq as _mpq, mpz as _mpz

    HAVE_GMPY2 = True
except ImportError:  # pragma: no cover - exercised only without gmpy2
    _mpq = Fraction
    _mpz = int
    HAVE_GMPY2 = False

QQ = _mpq
ZZ = _mpz


def rat(num, den=1):
    """Exact rational from ints, Fractions or decimal strings."""
    if isinstance(num, str):
        return QQ(Fraction(num))
    return QQ(num, den)


def is_exact(x) -> bool:
    """True for members of the exact rational coefficient domain."""
    if isinstance(x, (int, Fraction)):
        return True
    if isinstance(x, (float, complex)):
        return False
    return hasattr(x, "numerator") and hasattr(x, "denominator")


def as_float(x) -> float:
    """Exact rational -> correctly rounded float (safe for huge operands)."""
    if isinstance(x, float):
        return x
    n, d = x.numerator, x.denominator
    return float(Fraction(int(n), int(d)))
