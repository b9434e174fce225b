"""Dense univariate polynomials over exact rationals or complex doubles.

Coefficients are stored ascending. The zero polynomial has an empty
coefficient list; for anything else the leading coefficient is nonzero.
Exact-domain coefficients may be Python ints or QQ rationals; the complex
domain uses Python complex. GCDs exist only in the exact domain and run a
heuristic (integer-evaluation) algorithm with a subresultant fallback,
verified by exact trial division.
"""

from __future__ import annotations

import math
from fractions import Fraction

from ..errors import NumericalError
from .rational import QQ, ZZ, as_float, is_exact

try:
    from gmpy2 import gcd as _int_gcd
except ImportError:  # pragma: no cover
    _int_gcd = math.gcd


def _trim(coeffs):
    n = len(coeffs)
    while n > 0 and coeffs[n - 1] == 0:
        n -= 1
    return coeffs[:n]


class Polynomial:
    """Immutable dense polynomial. ``coeffs[i]`` multiplies z**i."""

    __slots__ = ("coeffs", "_domain")

    def __init__(self, coeffs=()):
        cs = tuple(_trim(list(coeffs)))
        object.__setattr__(self, "coeffs", cs)
        dom = "rational"
        for c in cs:
            if not is_exact(c):
                dom = "complex"
                break
        object.__setattr__(self, "_domain", dom)

    def __setattr__(self, *a):  # immutability
        raise AttributeError("Polynomial is immutable")

    # -- constructors -------------------------------------------------
    @staticmethod
    def zero():
        return Polynomial(())

    @staticmethod
    def one():
        return Polynomial((1,))

    @staticmethod
    def z():
        """The generator: the Laplace variable itself."""
        return Polynomial((0, 1))

    @staticmethod
    def const(c):
        return Polynomial((c,))

    @staticmethod
    def from_roots(roots):
        """Monic polynomial with the given (complex) roots. Test helper."""
        p = Polynomial((1 + 0j,))
        for r in roots:
            p = p * Polynomial((-r, 1 + 0j))
        return p

    # -- basic queries -------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def domain(self) -> str:
        return self._domain

    def leading(self):
        if not self.coeffs:
            return 0
        return self.coeffs[-1]

    def __bool__(self):
        return bool(self.coeffs)

    def __hash__(self):
        return hash(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        if len(self.coeffs) != len(other.coeffs):
            return False
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __repr__(self):
        if self.is_zero():
            return "Polynomial(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            terms.append(f"({c})*z^{i}" if i else f"({c})")
        return "Polynomial(" + " + ".join(terms) + ")"

    # -- arithmetic ----------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial.zero()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, s):
        return Polynomial([c * s for c in self.coeffs])

    def shift(self, k: int):
        """Multiply by z**k."""
        if self.is_zero():
            return self
        return Polynomial([0] * k + list(self.coeffs))

    def divmod(self, other: "Polynomial"):
        """Exact-domain polynomial division with remainder (field arithmetic)."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = [QQ(c) for c in self.coeffs]
        db = other.degree
        lb = QQ(other.leading())
        quot = [QQ(0)] * max(len(rem) - db, 0)
        for i in range(len(rem) - db - 1, -1, -1):
            q = rem[i + db] / lb
            if q:
                quot[i] = q
                for j, c in enumerate(other.coeffs):
                    rem[i + j] -= q * c
        return Polynomial(quot), Polynomial(rem[:db] if db > 0 else [])

    def derivative(self):
        return Polynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    # -- evaluation ------------------------------------------------------
    def __call__(self, x):
        """Horner evaluation; works for exact scalars, complex, mpmath, jets."""
        if not self.coeffs:
            return 0 * x
        acc = self.coeffs[-1] + 0 * x
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def eval_float(self, x):
        """Evaluate at complex x after converting coefficients to floats.

        Coefficients are pre-scaled by the largest magnitude, so huge exact
        integers do not overflow; returns (value, scale) with
        p(x) = value * scale where scale is an exact rational.
        """
        if not self.coeffs:
            return 0j, QQ(1)
        m = max(abs(c) for c in self.coeffs)
        if m == 0:
            return 0j, QQ(1)
        if self.domain == "rational":
            scaled = [as_float(QQ(c) / QQ(m)) for c in self.coeffs]
        else:
            scaled = [complex(c) / float(m) for c in self.coeffs]
            m = float(m)
        acc = complex(scaled[-1])
        for c in reversed(scaled[:-1]):
            acc = acc * x + c
        return acc, m

    # -- exact-domain helpers ---------------------------------------------
    def clear_denominators(self):
        """Return (integer polynomial, multiplier) with multiplier * self integral."""
        if self.domain != "rational":
            raise NumericalError("clear_denominators requires the exact domain")
        den = 1
        for c in self.coeffs:
            den = den * (c.denominator // int(_int_gcd(ZZ(den), ZZ(c.denominator))))
        den = ZZ(den)
        out = [ZZ(c.numerator) * (den // ZZ(c.denominator)) if not isinstance(c, int)
               else ZZ(c) * den for c in self.coeffs]
        return Polynomial(out), QQ(den)

    def content(self):
        """Integer content of an integer-coefficient polynomial."""
        g = ZZ(0)
        for c in self.coeffs:
            g = _int_gcd(g, ZZ(c))
            if g == 1:
                break
        return g

    def primitive_positive(self):
        """(primitive part with positive leading coefficient, removed factor)."""
        if self.is_zero():
            return self, QQ(1)
        zp, mult = self.clear_denominators()
        cont = zp.content()
        if zp.leading() < 0:
            cont = -cont
        prim = Polynomial([ZZ(c) // cont for c in zp.coeffs])
        return prim, QQ(cont) / mult


def _coerce(x):
    if isinstance(x, Polynomial):
        return x
    return Polynomial((x,))


# -- GCD machinery (exact domain only) -------------------------------------

def _zdivide_exact(f: Polynomial, g: Polynomial):
    """f // g in ZZ[x] if the division is exact, else None."""
    if g.is_zero():
        return None
    rem = list(f.coeffs)
    dg = g.degree
    lg = g.leading()
    if dg < 0 or len(rem) - 1 < dg:
        return None if not f.is_zero() else Polynomial.zero()
    quot = [0] * (len(rem) - dg)
    for i in range(len(rem) - dg - 1, -1, -1):
        c = rem[i + dg]
        if c % lg != 0:
            return None
        q = c // lg
        quot[i] = q
        if q:
            for j, gc in enumerate(g.coeffs):
                rem[i + j] -= q * gc
    if any(c != 0 for c in rem[:dg]):
        return None
    return Polynomial(quot)


def _gcd_heuristic(f: Polynomial, g: Polynomial, tries: int = 8):
    """Integer-evaluation GCD of primitive ZZ[x] polynomials; None if not found."""
    bound = max(max(abs(int(c)) for c in f.coeffs),
                max(abs(int(c)) for c in g.coeffs))
    xi = 2 * bound + 2
    for _ in range(tries):
        hf = int(f(ZZ(xi)))
        hg = int(g(ZZ(xi)))
        if hf == 0 or hg == 0:
            xi = 2 * xi + 1
            continue
        h = int(_int_gcd(ZZ(hf), ZZ(hg)))
        # balanced base-xi digit reconstruction
        digits = []
        while h:
            d = h % xi
            if d > xi // 2:
                d -= xi
            digits.append(d)
            h = (h - d) // xi
        cand = Polynomial(digits)
        if not cand.is_zero():
            cand, _ = cand.primitive_positive()
            if _zdivide_exact(f, cand) is not None and _zdivide_exact(g, cand) is not None:
                return cand
        xi = 2 * xi + 1
    return None


def _gcd_subresultant(f: Polynomial, g: Polynomial):
    """Subresultant PRS GCD for primitive ZZ[x] polynomials."""
    if f.degree < g.degree:
        f, g = g, f
    h = 1
    gamma = 1
    while True:
        if g.is_zero():
            prim, _ = f.primitive_positive()
            return prim
        delta = f.degree - g.degree
        # pseudo-remainder
        lg = g.leading()
        rem = f.scale(lg ** (delta + 1))
        q, r = rem.divmod(g)
        del q
        if r.is_zero():
            prim, _ = g.primitive_positive()
            return prim
        r_int, _ = r.primitive_positive()  # control growth (simplified PRS)
        f, g = g, r_int
        gamma = lg
        h = h  # retained for clarity; primitive reduction supersedes scaling


def poly_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """GCD in QQ[z], returned primitive over ZZ with positive leading coeff.

    Rejects inexact coefficient domains: cancellation decisions are
    meaningless in floating point.
    """
    if p.domain != "rational" or q.domain != "rational":
        raise NumericalError("poly_gcd requires exact rational coefficients")
    if p.is_zero():
        return q.primitive_positive()[0] if not q.is_zero() else Polynomial.zero()
    if q.is_zero():
        return p.primitive_positive()[0]
    fp, _ = p.primitive_positive()
    gq, _ = q.primitive_positive()
    if fp.degree == 0 or gq.degree == 0:
        return Polynomial.one()
    got = _gcd_heuristic(fp, gq)
    if got is None:
        got = _gcd_subresultant(fp, gq)
    return got


def poly_lcm(p: Polynomial, q: Polynomial) -> Polynomial:
    g = poly_gcd(p, q)
    quot = _zdivide_exact(p.primitive_positive()[0], g)
    return (quot * q.primitive_positive()[0]).primitive_positive()[0]


# -- serialization ----------------------------------------------------------

def poly_to_json(p: Polynomial) -> dict:
    if p.domain == "rational":
        coeffs = [[int(QQ(c).numerator), int(QQ(c).denominator)] for c in p.coeffs]
        return {"domain": "rational", "coeffs": coeffs}
    coeffs = [[complex(c).real, complex(c).imag] for c in p.coeffs]
    return {"domain": "complex", "coeffs": coeffs}


def poly_from_json(obj: dict) -> Polynomial:
    if obj["domain"] == "rational":
        return Polynomial([QQ(Fraction(n, d)) for n, d in obj["coeffs"]])
    return Polynomial([complex(re, im) for re, im in obj["coeffs"]])
