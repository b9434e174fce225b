"""Rational functions in the Laplace variable z.

Exact domain invariant: gcd(num, den) is constant, den carries integer
coefficients, is primitive (content removed) and has a positive leading
coefficient; num absorbs any residual rational scale. The complex domain
only normalizes den to monic; no cancellation is attempted there.
"""

from __future__ import annotations

from .poly import Polynomial, poly_gcd, poly_to_json, poly_from_json, _zdivide_exact
from .rational import QQ, as_float


def _is_integral(p: Polynomial) -> bool:
    if p.domain != "rational":
        return False
    return all(c.denominator == 1 for c in p.coeffs)


class RationalFunction:
    __slots__ = ("num", "den")

    def __init__(self, num, den=None, reduce: bool = True):
        if not isinstance(num, Polynomial):
            num = Polynomial(num) if isinstance(num, (list, tuple)) else Polynomial.const(num)
        if den is None:
            den = Polynomial.one()
        elif not isinstance(den, Polynomial):
            den = Polynomial(den) if isinstance(den, (list, tuple)) else Polynomial.const(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = Polynomial.zero(), Polynomial.one()
        elif num.domain == "rational" and den.domain == "rational":
            num, den = self._canonical_exact(num, den, reduce)
        else:
            lead = complex(den.leading())
            num = num.scale(1 / lead)
            den = den.scale(1 / lead)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("RationalFunction is immutable")

    @staticmethod
    def _canonical_exact(num, den, reduce):
        nz, nmul = num.primitive_positive()   # num == nz * nmul
        dz, dmul = den.primitive_positive()
        if reduce and nz.degree > 0 and dz.degree > 0:
            g = poly_gcd(nz, dz)
            if g.degree > 0:
                nz = _zdivide_exact(nz, g)
                dz = _zdivide_exact(dz, g)
        s = QQ(nmul) / QQ(dmul)
        if s != 1:
            nz = nz.scale(s)
        return nz, dz

    # -- constructors ---------------------------------------------------
    @staticmethod
    def z():
        return RationalFunction(Polynomial.z())

    @staticmethod
    def const(c):
        return RationalFunction(Polynomial.const(c))

    @staticmethod
    def zero():
        return RationalFunction(Polynomial.zero())

    # -- queries ----------------------------------------------------------
    @property
    def domain(self):
        if self.num.domain == "complex" or self.den.domain == "complex":
            return "complex"
        return "rational"

    def is_zero(self):
        return self.num.is_zero()

    def is_constant(self):
        return self.num.degree <= 0 and self.den.degree <= 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            if isinstance(other, Polynomial):
                other = RationalFunction(other)
            else:
                other = RationalFunction.const(other)
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFunction({self.num!r} / {self.den!r})"

    # -- arithmetic ---------------------------------------------------------
    def _wrap(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Polynomial):
            return RationalFunction(other)
        return RationalFunction.const(other)

    def __add__(self, other):
        o = self._wrap(other)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return self._wrap(other) + (-self)

    def __mul__(self, other):
        o = self._wrap(other)
        if self.is_zero() or o.is_zero():
            return RationalFunction.zero()
        # cross-cancel before multiplying: keeps intermediate degrees low
        if (_is_integral(self.num) and _is_integral(o.num)
                and self.domain == "rational" and o.domain == "rational"):
            n1, d1, n2, d2 = self.num, self.den, o.num, o.den
            g1 = poly_gcd(n1, d2)
            if g1.degree > 0:
                n1 = _zdivide_exact(n1, g1)
                d2 = _zdivide_exact(d2, g1)
            g2 = poly_gcd(n2, d1)
            if g2.degree > 0:
                n2 = _zdivide_exact(n2, g2)
                d1 = _zdivide_exact(d1, g2)
            return RationalFunction(n1 * n2, d1 * d2)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._wrap(other)
        if o.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return self * RationalFunction(o.den, o.num, reduce=False)

    def __rtruediv__(self, other):
        return self._wrap(other) / self

    def __pow__(self, n: int):
        if n < 0:
            if self.is_zero():
                raise ZeroDivisionError("negative power of zero")
            return RationalFunction(self.den ** (-n), self.num ** (-n), reduce=False)
        return RationalFunction(self.num ** n, self.den ** n, reduce=False)

    # -- evaluation -----------------------------------------------------------
    def __call__(self, x):
        """Evaluate with the arithmetic of x (exact scalar, complex, mpmath, Jet)."""
        d = self.den(x)
        n = self.num(x)
        return n / d

    def eval_numeric(self, x: complex) -> complex:
        """Float evaluation safe against huge exact coefficients."""
        nv, ns = self.num.eval_float(x)
        dv, ds = self.den.eval_float(x)
        if dv == 0:
            raise ZeroDivisionError(f"denominator vanishes at {x!r}")
        if self.domain == "rational":
            scale = as_float(QQ(ns) / QQ(ds))
        else:
            scale = float(ns) / float(ds)
        return nv / dv * scale

    def to_complex(self) -> "RationalFunction":
        """Convert exact coefficients to complex doubles (scaled safely)."""
        if self.domain == "complex":
            return self
        nm = max((abs(c) for c in self.num.coeffs), default=1) or 1
        dm = max((abs(c) for c in self.den.coeffs), default=1) or 1
        ncoeffs = [complex(as_float(QQ(c) / QQ(nm))) for c in self.num.coeffs]
        dcoeffs = [complex(as_float(QQ(c) / QQ(dm))) for c in self.den.coeffs]
        s = as_float(QQ(nm) / QQ(dm))
        return RationalFunction(Polynomial(ncoeffs).scale(s), Polynomial(dcoeffs))

    # -- serialization -----------------------------------------------------------
    def to_json(self) -> dict:
        return {"num": poly_to_json(self.num), "den": poly_to_json(self.den)}

    @staticmethod
    def from_json(obj: dict) -> "RationalFunction":
        return RationalFunction(poly_from_json(obj["num"]), poly_from_json(obj["den"]))
