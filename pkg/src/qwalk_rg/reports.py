"""Result records for fixed-point analysis and zeta expansions (JSON-friendly)."""

from __future__ import annotations

from dataclasses import dataclass, field


def _c2j(c: complex) -> list[float]:
    c = complex(c)
    return [c.real, c.imag]


@dataclass(frozen=True)
class FixedPointReport:
    model: str
    coin: str
    z_fp: complex
    a_inf: complex
    b_inf: complex
    jacobian: tuple  # ((Jaa, Jab), (Jba, Jbb))
    eigenvalues: tuple  # (lambda1, lambda2)
    d_w: float
    residual: float
    offdiag_max: float

    def to_json(self) -> dict:
        J = self.jacobian
        return {
            "model": self.model,
            "coin": self.coin,
            "z_fp": _c2j(self.z_fp),
            "a_inf": _c2j(self.a_inf),
            "b_inf": _c2j(self.b_inf),
            "jacobian": [[_c2j(J[0][0]), _c2j(J[0][1])], [_c2j(J[1][0]), _c2j(J[1][1])]],
            "eigenvalues": [_c2j(self.eigenvalues[0]), _c2j(self.eigenvalues[1])],
            "d_w": self.d_w,
            "fixed_point_residual": self.residual,
            "jacobian_offdiag_max": self.offdiag_max,
        }


@dataclass(frozen=True)
class ExpansionReport:
    """Growth of zeta-order coefficients of the flow and of the observable.

    All growth data come from jet iteration at frozen z = z_fp, seeded with
    unit first-order deviations. ``alpha2_prefactor`` is the accelerated limit
    of alpha_k^(2) / (alpha_k^(1))^2 from the pure-a seed; the observable
    block records per-k Laurent coefficients of [X_k]_{11} and the ratios of
    consecutive levels, both raw and as the response to the b-seed.
    """
    model: str
    coin: str
    z_fp: complex
    lambda1: float
    lambda2: float
    k_list: list
    alpha_orders: dict      # k -> (alpha1, alpha2, alpha3)  [seed (1,1)]
    beta_orders: dict       # k -> (beta1, beta2, beta3)     [seed (1,1)]
    alpha2_prefactor: complex
    alpha2_prefactor_expected: complex
    alpha3_prefactor: complex
    alpha3_prefactor_expected: complex
    beta2_ratio: complex
    x11_coeffs: dict        # k -> {-1: c, 0: c, 1: c}       [seed (1,1)]
    x11_b_response: dict    # k -> {-1: dc, 0: dc, 1: dc}    [seed diff]
    x11_ratio_minus1: float
    x11_ratio_plus1_raw: float
    x11_ratio_plus1_b_response: float
    notes: list = field(default_factory=list)

    def to_json(self) -> dict:
        def cmap(d):
            return {str(k): {str(p): _c2j(v) for p, v in row.items()} for k, row in d.items()}

        return {
            "model": self.model,
            "coin": self.coin,
            "z_fp": _c2j(self.z_fp),
            "lambda1": self.lambda1,
            "lambda2": self.lambda2,
            "k_list": list(self.k_list),
            "alpha_orders": {str(k): [_c2j(x) for x in v] for k, v in self.alpha_orders.items()},
            "beta_orders": {str(k): [_c2j(x) for x in v] for k, v in self.beta_orders.items()},
            "alpha2_prefactor": _c2j(self.alpha2_prefactor),
            "alpha2_prefactor_expected": _c2j(self.alpha2_prefactor_expected),
            "alpha3_prefactor": _c2j(self.alpha3_prefactor),
            "alpha3_prefactor_expected": _c2j(self.alpha3_prefactor_expected),
            "beta2_ratio": _c2j(self.beta2_ratio),
            "x11_coeffs": cmap(self.x11_coeffs),
            "x11_b_response": cmap(self.x11_b_response),
            "x11_ratio_minus1": self.x11_ratio_minus1,
            "x11_ratio_plus1_raw": self.x11_ratio_plus1_raw,
            "x11_ratio_plus1_b_response": self.x11_ratio_plus1_b_response,
            "notes": list(self.notes),
        }
