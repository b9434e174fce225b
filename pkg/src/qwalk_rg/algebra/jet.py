"""Truncated power series (jets) in zeta = z - z_FP with complex coefficients.

A jet stores coefficients for powers val .. order, where ``val`` may go
negative through division (Laurent window). Arithmetic truncates at the
smaller ``order`` of the operands, so mixed expressions stay consistent.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import ExpansionAtPoleError
from .rational import as_float

DEFAULT_ORDER = 3
_MAX_LIFT_ORDER = 4


def _as_complex(x) -> complex:
    if isinstance(x, complex):
        return x
    if isinstance(x, (int, float)):
        return complex(x)
    if isinstance(x, Fraction) or hasattr(x, "denominator"):
        return complex(as_float(x))
    return complex(x)


class Jet:
    __slots__ = ("val", "c", "order")

    def __init__(self, val: int, coeffs, order: int = DEFAULT_ORDER):
        n = order - val + 1
        c = [_as_complex(x) for x in coeffs][:max(n, 0)]
        object.__setattr__(self, "val", val)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "order", order)

    def __setattr__(self, *a):
        raise AttributeError("Jet is immutable")

    # -- constructors -------------------------------------------------
    @staticmethod
    def const(x, order: int = DEFAULT_ORDER) -> "Jet":
        return Jet(0, [x], order)

    @staticmethod
    def zeta(order: int = DEFAULT_ORDER) -> "Jet":
        return Jet(1, [1.0], order)

    @staticmethod
    def seed(c0, c1, order: int = DEFAULT_ORDER) -> "Jet":
        """c0 + c1 * zeta."""
        return Jet(0, [c0, c1], order)

    # -- queries --------------------------------------------------------
    def coeff(self, power: int) -> complex:
        i = power - self.val
        if 0 <= i < len(self.c):
            return self.c[i]
        return 0j

    def coeffs_dict(self) -> dict:
        return {self.val + i: v for i, v in enumerate(self.c)}

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.c)

    def __eq__(self, other):
        if isinstance(other, Jet):
            lo = min(self.val, other.val)
            hi = min(self.order, other.order)
            return all(self.coeff(p) == other.coeff(p) for p in range(lo, hi + 1))
        if isinstance(other, (int, float, complex)):
            oc = _as_complex(other)
            return self.coeff(0) == oc and all(
                self.coeff(p) == 0 for p in range(self.val, self.order + 1) if p != 0)
        return NotImplemented

    def __repr__(self):
        terms = [f"{v!r}*zeta^{self.val + i}" for i, v in enumerate(self.c)]
        return f"Jet({' + '.join(terms) or '0'}; order={self.order})"

    # -- arithmetic ------------------------------------------------------
    def _lift(self, other) -> "Jet":
        if isinstance(other, Jet):
            return other
        return Jet.const(other, self.order)

    def __add__(self, other):
        o = self._lift(other)
        order = min(self.order, o.order)
        v = min(self.val, o.val)
        n = order - v + 1
        c = [0j] * max(n, 0)
        for i, x in enumerate(self.c):
            p = self.val + i
            if v <= p <= order:
                c[p - v] += x
        for i, x in enumerate(o.c):
            p = o.val + i
            if v <= p <= order:
                c[p - v] += x
        return Jet(v, c, order)

    __radd__ = __add__

    def __neg__(self):
        return Jet(self.val, [-x for x in self.c], self.order)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        order = min(self.order, o.order)
        v = self.val + o.val
        n = order - v + 1
        if n <= 0:
            return Jet(v, [], order)
        c = [0j] * n
        for i, x in enumerate(self.c):
            if x == 0:
                continue
            for j, y in enumerate(o.c):
                if i + j < n:
                    c[i + j] += x * y
        return Jet(v, c, order)

    __rmul__ = __mul__

    def inv(self, drop: float = 0.0) -> "Jet":
        """Reciprocal series. Leading coefficients that are exactly zero (or
        below ``drop`` relative to the largest coefficient) shift the
        valuation, producing a Laurent window."""
        c = list(self.c)
        v = self.val
        scale = max((abs(x) for x in c), default=0.0)
        while c and (c[0] == 0 or (drop > 0 and abs(c[0]) <= drop * scale)):
            c.pop(0)
            v += 1
        if not c:
            raise ZeroDivisionError("reciprocal of the zero jet")
        order = self.order
        n = order - (-v) + 1
        if n <= 0:
            return Jet(-v, [], order)
        r = [0j] * n
        r[0] = 1 / c[0]
        for i in range(1, n):
            s = 0j
            for j in range(1, min(i, len(c) - 1) + 1):
                s += c[j] * r[i - j]
            r[i] = -s / c[0]
        return Jet(-v, r, order)

    def __truediv__(self, other):
        o = self._lift(other)
        return self * o.inv()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        result = Jet.const(1.0, self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result


def jet_lift(f, z_fp: complex, order: int = DEFAULT_ORDER) -> Jet:
    """Taylor coefficients of a polynomial / rational function about z_fp.

    Coefficient 0 equals f(z_fp); expansion at a pole raises.
    """
    if order > _MAX_LIFT_ORDER:
        raise ValueError(f"jet order capped at {_MAX_LIFT_ORDER}")
    den = getattr(f, "den", None)
    if den is not None:
        dval, _ = den.eval_float(complex(z_fp))
        if dval == 0:
            raise ExpansionAtPoleError(f"denominator vanishes at {z_fp!r}")
        f = f.to_complex() if f.domain == "rational" else f
    elif getattr(f, "domain", None) == "rational":
        coeffs = [complex(as_float(c if hasattr(c, "denominator") else c))
                  for c in f.coeffs]
        from .poly import Polynomial
        f = Polynomial(coeffs)
    x = Jet.const(complex(z_fp), order) + Jet.zeta(order)
    return f(x)
