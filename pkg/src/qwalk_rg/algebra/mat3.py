"""3x3 matrices over any coefficient domain used in the package.

Entries may be exact rationals, complex numbers, RationalFunction values or
jets; all operations are generic over the entry arithmetic. Inversion is
adjugate over determinant, which keeps exact domains exact.
"""

from __future__ import annotations

from ..errors import SingularMatrixError
from .jet import Jet
from .ratfun import RationalFunction
from .rational import is_exact


class Mat3:
    __slots__ = ("m",)

    def __init__(self, rows):
        m = [list(r) for r in rows]
        if len(m) != 3 or any(len(r) != 3 for r in m):
            raise ValueError("Mat3 needs 3x3 entries")
        object.__setattr__(self, "m", m)

    def __setattr__(self, *a):
        raise AttributeError("Mat3 is immutable")

    # -- constructors ---------------------------------------------------
    @staticmethod
    def identity(one=1, zero=0):
        return Mat3([[one, zero, zero], [zero, one, zero], [zero, zero, one]])

    @staticmethod
    def zeros(zero=0):
        return Mat3([[zero] * 3 for _ in range(3)])

    @staticmethod
    def diag(a, b, c, zero=0):
        return Mat3([[a, zero, zero], [zero, b, zero], [zero, zero, c]])

    # -- access ------------------------------------------------------------
    def __getitem__(self, ij):
        i, j = ij
        return self.m[i][j]

    def rows(self):
        return [list(r) for r in self.m]

    def map(self, fn) -> "Mat3":
        return Mat3([[fn(x) for x in r] for r in self.m])

    def __eq__(self, other):
        if not isinstance(other, Mat3):
            return NotImplemented
        return all(self.m[i][j] == other.m[i][j] for i in range(3) for j in range(3))

    def __repr__(self):
        return "Mat3(" + ", ".join(repr(r) for r in self.m) + ")"

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        return Mat3([[self.m[i][j] + other.m[i][j] for j in range(3)] for i in range(3)])

    def __sub__(self, other):
        return Mat3([[self.m[i][j] - other.m[i][j] for j in range(3)] for i in range(3)])

    def __neg__(self):
        return Mat3([[-x for x in r] for r in self.m])

    def __matmul__(self, other: "Mat3") -> "Mat3":
        a, b = self.m, other.m
        out = []
        for i in range(3):
            row = []
            for j in range(3):
                row.append(a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j])
            out.append(row)
        return Mat3(out)

    def __mul__(self, scalar):
        return Mat3([[x * scalar for x in r] for r in self.m])

    __rmul__ = __mul__

    def apply(self, vec):
        """Matrix times length-3 vector."""
        return [self.m[i][0] * vec[0] + self.m[i][1] * vec[1] + self.m[i][2] * vec[2]
                for i in range(3)]

    def transpose(self) -> "Mat3":
        return Mat3([[self.m[j][i] for j in range(3)] for i in range(3)])

    def dagger(self) -> "Mat3":
        """Conjugate transpose; numeric and exact-real entries only."""
        def conj(x):
            if isinstance(x, complex):
                return x.conjugate()
            if is_exact(x):
                return x
            return x.conjugate()
        return self.transpose().map(conj)

    # -- determinant / inverse ------------------------------------------------
    def det(self):
        m = self.m
        return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))

    def adjugate(self) -> "Mat3":
        (a, b, c), (d, e, f), (g, h, i) = self.m
        return Mat3([
            [e * i - f * h, c * h - b * i, b * f - c * e],
            [f * g - d * i, a * i - c * g, c * d - a * f],
            [d * h - e * g, b * g - a * h, a * e - b * d],
        ])

    def inverse(self, singular_tol: float = 1e-14) -> "Mat3":
        """Adjugate-over-determinant inverse.

        Exact domains require det != 0 exactly; the numeric domain rejects
        |det| below ``singular_tol``. Jet entries shift the Laurent window.
        """
        d = self.det()
        if isinstance(d, RationalFunction):
            if d.is_zero():
                raise SingularMatrixError(d)
            inv_d = RationalFunction(d.den, d.num, reduce=False)
        elif isinstance(d, Jet):
            inv_d = d.inv()
        elif is_exact(d):
            if d == 0:
                raise SingularMatrixError(d)
            from .rational import QQ
            inv_d = QQ(1) / QQ(d)
        else:
            if abs(complex(d)) < singular_tol:
                raise SingularMatrixError(d)
            inv_d = 1 / d
        return self.adjugate().map(lambda x: x * inv_d)

    def max_abs(self) -> float:
        return max(abs(complex(x)) for r in self.m for x in r)

    def to_complex(self) -> "Mat3":
        def cv(x):
            if isinstance(x, RationalFunction):
                raise TypeError("evaluate rational-function entries first")
            if is_exact(x):
                from .rational import as_float
                return complex(as_float(x))
            return complex(x)
        return self.map(cv)

    def to_numpy(self):
        import numpy as np
        return np.array(self.to_complex().m, dtype=complex)
