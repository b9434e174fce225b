"""Numeric root finding for the Laplace-pole pipeline.

Companion-matrix eigenvalues seed a Newton polish on the (magnitude-scaled)
coefficients; the contract is the relative residual bound, not the method.
"""

from __future__ import annotations

import numpy as np

from ..errors import DegreeOverflowError, RootFindingError
from .poly import Polynomial
from .rational import QQ, as_float

MAX_DEGREE = 4096
RESIDUAL_BOUND = 1e-10


def _scaled_float_coeffs(p: Polynomial) -> list[complex]:
    """Coefficients as complex floats, divided exactly by the largest magnitude."""
    if p.domain == "rational":
        m = max(abs(c) for c in p.coeffs)
        return [complex(as_float(QQ(c) / QQ(m))) for c in p.coeffs]
    m = max(abs(complex(c)) for c in p.coeffs)
    return [complex(c) / m for c in p.coeffs]


def _horner2(coeffs: list[complex], x: complex):
    """(p(x), p'(x)) by simultaneous Horner."""
    p = coeffs[-1]
    dp = 0j
    for c in reversed(coeffs[:-1]):
        dp = dp * x + p
        p = p * x + c
    return p, dp


def poly_roots(p: Polynomial, residual_bound: float = RESIDUAL_BOUND) -> list[complex]:
    """All complex roots with multiplicity, polished to |p(r)|/||p|| < bound.

    ||p|| is the max-magnitude coefficient norm of the scaled polynomial.
    """
    if p.degree < 1:
        raise ValueError("poly_roots needs degree >= 1")
    if p.degree > MAX_DEGREE:
        raise DegreeOverflowError(f"degree {p.degree} exceeds {MAX_DEGREE}")

    coeffs = _scaled_float_coeffs(p)

    # factor out roots at the origin exactly
    nzero = 0
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
        nzero += 1
    roots: list[complex] = [0j] * nzero
    deg = len(coeffs) - 1
    if deg == 0:
        return roots

    c = np.array(coeffs, dtype=complex)
    c /= c[-1]
    if deg == 1:
        raw = np.array([-c[0]])
    else:
        comp = np.zeros((deg, deg), dtype=complex)
        comp[1:, :-1] = np.eye(deg - 1)
        comp[:, -1] = -c[:-1]
        raw = np.linalg.eigvals(comp)

    norm = max(abs(x) for x in coeffs)
    polished = []
    worst = 0.0
    for r in raw:
        r = complex(r)
        best, best_res = r, abs(_horner2(coeffs, r)[0]) / norm
        for _ in range(50):
            val, dval = _horner2(coeffs, r)
            res = abs(val) / norm
            if res < best_res:
                best, best_res = r, res
            if res < residual_bound * 1e-3 or dval == 0:
                break
            step = val / dval
            if abs(step) > 1.0:  # runaway Newton near multiple roots
                step /= abs(step)
            r = r - step
        polished.append(best)
        worst = max(worst, best_res)
    if worst > residual_bound:
        raise RootFindingError(worst, p.degree)
    return roots + polished
