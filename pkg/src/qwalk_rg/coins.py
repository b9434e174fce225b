"""Coins, shift projectors and raw hopping matrices for both walk geometries.

Everything here is exact: coin entries are rationals with denominator 3, and
the Laplace parameter may be passed symbolically (a RationalFunction) or as
any numeric type.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .algebra import Mat3, QQ, RationalFunction


class CoinKind(enum.Enum):
    GROVER = "grover"
    ROT60 = "rot60"

    @staticmethod
    def parse(name: str) -> "CoinKind":
        try:
            return CoinKind(name.lower())
        except ValueError:
            raise ValueError(f"unknown coin {name!r}; expected 'grover' or 'rot60'") from None


class ModelKind(enum.Enum):
    LINE = "line"
    DSG = "dsg"

    @staticmethod
    def parse(name: str) -> "ModelKind":
        try:
            return ModelKind(name.lower())
        except ValueError:
            raise ValueError(f"unknown model {name!r}; expected 'line' or 'dsg'") from None


@dataclass(frozen=True)
class LineTriple:
    """Hopping matrices {A, B, M} of the line propagator."""
    A: Mat3
    B: Mat3
    M: Mat3


@dataclass(frozen=True)
class DsgTriple:
    """Hopping matrices {M, A, C} of the DSG propagator."""
    M: Mat3
    A: Mat3
    C: Mat3


def coin_matrix(kind: CoinKind) -> Mat3:
    """Exact coin matrix: the reflective Grover coin or the 60-degree rotation."""
    t = QQ(1, 3)
    if kind is CoinKind.GROVER:
        rows = [[-1, 2, 2], [2, -1, 2], [2, 2, -1]]
    else:
        rows = [[2, 2, -1], [-1, 2, 2], [2, -1, 2]]
    return Mat3([[QQ(v) * t for v in r] for r in rows])


def shift_matrices() -> tuple[Mat3, Mat3, Mat3]:
    """Diagonal projectors routing coin components right/left/stay."""
    SA = Mat3.diag(QQ(1), QQ(0), QQ(0), zero=QQ(0))
    SB = Mat3.diag(QQ(0), QQ(1), QQ(0), zero=QQ(0))
    SM = Mat3.diag(QQ(0), QQ(0), QQ(1), zero=QQ(0))
    return SA, SB, SM


def _scale(mat: Mat3, z) -> Mat3:
    from .algebra import as_float
    if isinstance(z, RationalFunction):
        return mat.map(lambda x: RationalFunction.const(x) * z)
    if isinstance(z, (complex, float)):
        return mat.map(lambda x: complex(as_float(x)) * z)
    return mat.map(lambda x: x * z)


def raw_line_triple(kind: CoinKind, z) -> LineTriple:
    """Raw (k=0) line hopping matrices A0 = z S^A C, B0 = z S^B C, M0 = z S^M C."""
    C = coin_matrix(kind)
    SA, SB, SM = shift_matrices()
    return LineTriple(A=_scale(SA @ C, z), B=_scale(SB @ C, z), M=_scale(SM @ C, z))


def raw_dsg_triple(kind: CoinKind, z) -> DsgTriple:
    """Raw (k=0) DSG hopping matrices.

    M routes back with weight -1/3 on the two in-triangle components, A moves
    within the triangle with weight 2/3, C crosses to the adjacent triangle on
    the third component; all multiplied by z.
    """
    C = coin_matrix(kind)
    dM = Mat3.diag(QQ(-1, 3), QQ(-1, 3), QQ(0), zero=QQ(0))
    dA = Mat3.diag(QQ(2, 3), QQ(2, 3), QQ(0), zero=QQ(0))
    dC = Mat3.diag(QQ(0), QQ(0), QQ(1), zero=QQ(0))
    return DsgTriple(M=_scale(dM @ C, z), A=_scale(dA @ C, z), C=_scale(dC @ C, z))


def reflectivity_order(C: Mat3, n_max: int = 12) -> int | None:
    """Smallest n <= n_max with C**n == identity (exact), else None."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    ident = Mat3.identity(one=QQ(1), zero=QQ(0))
    acc = C
    for n in range(1, n_max + 1):
        if acc == ident:
            return n
        acc = acc @ C
    return None
