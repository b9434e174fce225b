"""Real-space RG for the 3-state walk on the line.

Contains the matrix decimation step, the closed two-parameter scalar flows
for both coins, their exact solutions (algebraic and trigonometric form),
the origin-amplitude observable, fixed points with exact Jacobians, and the
zeta-order growth analysis around unit-circle fixed points.

The scalar maps here are the ones the matrix decimation actually closes on;
they are validated against the matrix RG symbolically in the test suite.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from functools import lru_cache

import mpmath

from .algebra import Jet, Mat3, Polynomial, QQ, RationalFunction, as_float
from .coins import CoinKind, LineTriple, coin_matrix, raw_line_triple, shift_matrices
from .errors import (BranchSingularityError, ExcludedPointError,
                     FlowSingularityError, SingularMatrixError)
from .reports import ExpansionReport, FixedPointReport

LAMBDA_PAIR = (2.0, 2.0)


# ---------------------------------------------------------------------------
# domain helpers

def _is_zero(x) -> bool:
    if isinstance(x, RationalFunction):
        return x.is_zero()
    if isinstance(x, Jet):
        return x.is_zero()
    return x == 0


def _check(x, name):
    if _is_zero(x):
        raise FlowSingularityError(name)
    return x


def _domain_one(z):
    if isinstance(z, RationalFunction):
        return RationalFunction.const(1)
    return 1


def _cast_mat(mat: Mat3, z) -> Mat3:
    """Cast an exact QQ matrix into the arithmetic domain of z."""
    if isinstance(z, RationalFunction):
        return mat.map(lambda x: RationalFunction.const(x))
    if isinstance(z, Jet):
        return mat.map(lambda x: complex(as_float(x)))
    if isinstance(z, (complex, float)):
        return mat.map(lambda x: complex(as_float(x)))
    return mat  # exact scalar z: keep QQ entries


# ---------------------------------------------------------------------------
# scalar flows (the medium the matrix RG closes on)

def scalar_ic(coin: CoinKind, z):
    """Level k=1 hopping parameters (a_1, b_1)."""
    if coin is CoinKind.GROVER:
        den = _check(z + 3, "(z + 3)")
        return z * z * (z - 1) / den, 2 * z * z * (z + 1) / den
    den = _check(2 * z - 3, "(2z - 3)")
    return 2 * z * z * (z - 1) / den, z * z * (1 - 2 * z) / den


def scalar_flow(coin: CoinKind, a, b, z):
    """One RG step of the hopping parameters; domain-generic."""
    if coin is CoinKind.GROVER:
        f1 = _check(b - 1, "(b - 1)")
        f2 = _check((3 * z + 1) * b - z - 3, "((3z+1) b - z - 3)")
        D = f1 * f2
        a2 = a * a * (z - 1) / D
        b2 = b - a * a * ((3 * z + 1) * b - 2 * z - 2) / D
        return a2, b2
    D = _check((2 * z - 3) * (2 * z - 1) - 2 * (z - 2) * (2 * z - 1) * b
               + (z - 2) * (3 * z - 2) * b * b,
               "((2z-3)(2z-1) - 2(z-2)(2z-1) b + (z-2)(3z-2) b^2)")
    a2 = 2 * (z - 1) * (2 * z - 1) * a * a / D
    b2 = b + (2 * z - 1) * a * a * ((3 * z - 2) * b - 2 * z + 1) / D
    return a2, b2


@dataclass(frozen=True)
class ScalarLineState:
    coin: CoinKind
    k: int
    a: object
    b: object


def scalar_init(coin: CoinKind, z) -> ScalarLineState:
    a, b = scalar_ic(coin, z)
    return ScalarLineState(coin, 1, a, b)


def scalar_step(state: ScalarLineState, z) -> ScalarLineState:
    a, b = scalar_flow(state.coin, state.a, state.b, z)
    return ScalarLineState(state.coin, state.k + 1, a, b)


@lru_cache(maxsize=None)
def symbolic_trajectory(coin: CoinKind, k_max: int) -> tuple:
    """Exact (a_k, b_k) as rational functions of z, for k = 1..k_max."""
    z = RationalFunction.z()
    st = scalar_init(coin, z)
    out = [(st.a, st.b)]
    for _ in range(k_max - 1):
        st = scalar_step(st, z)
        out.append((st.a, st.b))
    return tuple(out)


# ---------------------------------------------------------------------------
# matrix RG (decimation of odd sites)

def rg_step_matrix_line(triple: LineTriple, singular_tol: float = 1e-14) -> LineTriple:
    """A' = A K A, B' = B K B, M' = M + A K B + B K A with K = (I - M)^-1."""
    A, B, M = triple.A, triple.B, triple.M
    ident = Mat3.identity()
    try:
        K = (ident - M).inverse(singular_tol)
    except SingularMatrixError as e:
        raise SingularMatrixError(e.det, "(I - M_k) in the line decimation") from e
    return LineTriple(A=A @ K @ A, B=B @ K @ B, M=M + A @ K @ B + B @ K @ A)


def ansatz_line_triple(coin: CoinKind, a, b, z) -> LineTriple:
    """Hopping matrices built from the scalar parameters."""
    C = _cast_mat(coin_matrix(coin), z)
    SA, SB, _ = shift_matrices()
    SA = _cast_mat(SA, z)
    SB = _cast_mat(SB, z)
    zero = 0 * z
    if coin is CoinKind.GROVER:
        m01 = b
    else:
        m01 = (2 - z) * b / _check(2 * z - 1, "(2z - 1)")
    T = Mat3([[zero, m01, zero], [b, zero, zero], [zero, zero, z]])
    return LineTriple(A=(SA @ C).map(lambda x: x * a),
                      B=(SB @ C).map(lambda x: x * a),
                      M=T @ C)


def scalar_from_matrix(coin: CoinKind, triple: LineTriple) -> tuple:
    """Extract (a_k, b_k) from matrices in Ansatz form (template positions)."""
    Ct = _coin_transpose(coin, triple.A[0, 0])
    At = triple.A @ Ct
    Mt = triple.M @ Ct
    return At[0, 0], Mt[1, 0]


def _coin_transpose(coin: CoinKind, sample) -> Mat3:
    C = coin_matrix(coin).transpose()
    if isinstance(sample, RationalFunction):
        return C.map(lambda x: RationalFunction.const(x))
    if isinstance(sample, (complex, float, Jet)):
        return C.map(lambda x: complex(as_float(x)))
    return C


# ---------------------------------------------------------------------------
# observable: amplitude at the origin

def observable_X_direct(triple: LineTriple, singular_tol: float = 1e-14) -> Mat3:
    """X_k = [I - (A_k + B_k + M_k)]^-1."""
    S = triple.A + triple.B + triple.M
    try:
        return (Mat3.identity() - S).inverse(singular_tol)
    except SingularMatrixError as e:
        raise SingularMatrixError(e.det, "observable pole: I - (A+B+M) singular") from e


def observable_X(coin: CoinKind, a, b, z, singular_tol: float = 1e-14) -> Mat3:
    """Observable from the scalar parameters.

    The reflective coin admits an explicit entrywise template; the rotation
    coin goes through the Ansatz matrices and the direct inverse. Both paths
    agree with observable_X_direct wherever defined.
    """
    if coin is CoinKind.GROVER:
        den = (a + b) * (3 * z + 1) - (z + 3)
        e = 1 + a - b
        if _is_zero(den) or _is_zero(e):
            raise SingularMatrixError(den, "observable pole (template denominator)")
        x00 = (-z - 3 + a * (z - 1) + 2 * b * (z + 1)) / e
        x01 = (-2 * a * (z + 1) - b * (z - 1)) / e
        x02 = -2 * a - 2 * b
        x20 = -2 * z + 0 * a
        x22 = a + b - 3
        inv_den = _domain_one(z) / den
        return Mat3([[x00, x01, x02], [x01, x00, x02], [x20, x20, x22]]).map(
            lambda t: t * inv_den)
    return observable_X_direct(ansatz_line_triple(coin, a, b, z), singular_tol)


# ---------------------------------------------------------------------------
# closed-form solution (algebraic and trig form)

@dataclass(frozen=True)
class TrigParams:
    """Angle-variable parametrization of the exact flow solution.

    cos_nu and sin_sigma follow the closed formulas in z; cos_sigma and the
    doubling seed (cos_2nu, sin_2nu) are pinned by matching the k=1 state.
    xi = e^{i nu} and u are the equivalent algebraic constants. ``admissible``
    flags |xi| = 1, i.e. arg z inside the coin's accumulation interval(s).
    """
    coin: CoinKind
    z: complex
    omega: complex
    cos_nu: complex
    sin_sigma: complex
    cos_sigma: complex
    cos_2nu: complex
    sin_2nu: complex
    nu: complex
    sigma: complex
    xi: complex
    u: complex
    admissible: bool


def _mp(z, prec):
    return mpmath.mpc(complex(z))


def _fit_trig(coin: CoinKind, z, prec: int = 60):
    """Solve the k=1 matching for (cos_sigma sign, cos2nu, sin2nu) in mpmath."""
    with mpmath.workdps(prec):
        zz = mpmath.mpc(complex(z))
        one = mpmath.mpf(1)
        cosw = (zz + 1 / zz) / 2
        cos2w = 2 * cosw * cosw - 1
        if coin is CoinKind.GROVER:
            sin_sigma = -mpmath.mpf(9) / 4 * zz ** 2 - mpmath.mpf(3) / 2 * zz - mpmath.mpf(5) / 4
            cos_nu = 9 * cos2w + 24 * cosw + 16
            b_inf = 2 * (zz + 1) / (3 * zz + 1)
            acoef = (1 - zz)          # a_k = acoef*cos_sigma / (den_c*cos(2^k nu + sigma))
            bcoef = (zz - 1)          # b_k = b_inf + bcoef*sin(2^k nu) / (den_c*cos(...))
            den_c = 3 * zz + 1
        else:
            arg = (2 * zz - 1) * (2 - zz)
            if arg == 0:
                raise BranchSingularityError(f"sqrt argument vanishes at z = {z!r}")
            sin_sigma = (9 * zz ** 3 - 3 * zz ** 2 - zz + 2) / (4 * mpmath.sqrt(arg))
            cos_nu = mpmath.mpf(11) / 8 + mpmath.mpf(3) / 2 * cosw + mpmath.mpf(9) / 4 * cos2w
            b_inf = (2 * zz - 1) / (3 * zz - 2)
            acoef = 2 * (zz - 1)
            bcoef = 2 * (zz - 1) * mpmath.sqrt((2 * zz - 1) / (2 - zz))
            den_c = 3 * zz - 2
        a1, b1 = scalar_ic(coin, zz)
        if a1 == 0:
            raise BranchSingularityError(f"k=1 state degenerate at z = {z!r}")
        a2, b2 = scalar_flow(coin, a1, b1, zz)
        # solve the k=1 matching in closed form:
        #   a1 = acoef*cos(sigma)/(den_c*cos(t+sigma)),
        #   b1 = b_inf + bcoef*sin(t)/(den_c*cos(t+sigma))      (t = 2 nu)
        # eliminate t and sigma via cos(t+sigma) expansion.
        alpha = a1 * den_c / acoef
        beta = (b1 - b_inf) * den_c / bcoef
        if beta == 0:
            raise BranchSingularityError(
                f"k=1 state sits on the stationary axis at z = {z!r}")
        sig_s = (alpha ** 2 - beta ** 2 - 1) / (2 * beta)   # sin(sigma)
        cos_2nu = (1 + beta * sig_s) / alpha
        tol = mpmath.mpf(10) ** (-prec // 2)
        best = None
        for s in (1, -1):
            cos_sig = s * mpmath.sqrt(1 - sig_s ** 2)
            sin_2nu = beta * cos_sig / alpha
            # one doubling must reproduce the k=2 state of the flow
            c4, s4 = 2 * cos_2nu ** 2 - 1, 2 * sin_2nu * cos_2nu
            c4s = c4 * cos_sig - s4 * sig_s
            if c4s == 0:
                continue
            step = abs(acoef * cos_sig / (den_c * c4s) - a2) \
                + abs(b_inf + bcoef * s4 / (den_c * c4s) - b2)
            if best is None or step < best[0]:
                best = (step, cos_sig, sin_2nu)
        if best is None or best[0] > tol * (1 + abs(a2) + abs(b2)):
            worst = float(best[0]) if best else float("inf")
            raise BranchSingularityError(
                f"trig-branch matching failed at z = {z!r} (residual {worst:.2e})")
        _, cos_sigma, sin_2nu = best
        return (zz, cosw, cos_nu, sig_s, cos_sigma, cos_2nu, sin_2nu,
                b_inf, acoef, bcoef, den_c, a1, b1)


def trig_params(coin: CoinKind, z, prec: int = 60) -> TrigParams:
    """Angle constants with branch signs pinned by the k=1 state."""
    with mpmath.workdps(prec):
        (zz, cosw, cos_nu, sin_sigma, cos_sigma, cos_2nu, sin_2nu,
         b_inf, acoef, bcoef, den_c, a1, b1) = _fit_trig(coin, z, prec)
        omega = mpmath.log(zz) / 1j
        sigma = mpmath.log(cos_sigma + 1j * sin_sigma) / 1j
        two_nu = mpmath.log(cos_2nu + 1j * sin_2nu) / 1j
        nu = two_nu / 2
        xi = mpmath.exp(1j * nu)
        # resolve the sign of xi (odd power at k=1) against the algebraic form
        xi_fix, u = _fit_algebraic(coin, zz, xi, sigma, a1, b1)
        admissible = abs(mpmath.im(cos_nu)) < mpmath.mpf(10) ** (-prec // 2) \
            and abs(mpmath.re(cos_nu)) <= 1
        return TrigParams(
            coin=coin, z=complex(zz), omega=complex(omega),
            cos_nu=complex(cos_nu), sin_sigma=complex(sin_sigma),
            cos_sigma=complex(cos_sigma), cos_2nu=complex(cos_2nu),
            sin_2nu=complex(sin_2nu), nu=complex(nu), sigma=complex(sigma),
            xi=complex(xi_fix), u=complex(u), admissible=bool(admissible))


def _closed_algebraic_k(coin: CoinKind, z, u, xpow_half, xpow_full):
    """The published rational expressions in u and xi^{2^{k-1}}, xi^{2^k}."""
    if coin is CoinKind.GROVER:
        Q = 3 * u * z + u - 2 * z - 2
        den = (z - 1) ** 2 - Q ** 2 * xpow_full
        a = (u - 1) * (z - 1) * (3 * u * z + u - z - 3) * xpow_half / den
        b = (u * (z - 1) ** 2 - Q * (2 * u * z + 2 * u - z - 3) * xpow_full) / den
        return a, b
    Q = (3 * z - 2) * u - 2 * z + 1
    den = 4 * (2 * z - 1) * (z - 1) ** 2 + (z - 2) * Q ** 2 * xpow_full
    a = 2 * (z - 1) * ((z - 2) * (3 * z - 2) * u ** 2 - 2 * (z - 2) * (2 * z - 1) * u
                       + 4 * z ** 2 - 8 * z + 3) * xpow_half / den
    b = 2 * (z - 1) * (4 * (z - 1) ** 2 * u + ((z - 2) * u - 2 * z + 3) * Q * xpow_full) / den
    return a, b


def _fit_algebraic(coin: CoinKind, zz, xi, sigma, a1, b1):
    """Pick the sign of xi and the branch of u matching the k=1 state."""
    esig = mpmath.exp(1j * sigma)
    if coin is CoinKind.GROVER:
        u_cands = [(2 * (zz + 1) + 1j * esig * (zz - 1)) / (3 * zz + 1)]
    else:
        root = mpmath.sqrt((2 * zz - 1) / (zz - 2))
        u_cands = [2 * (zz - 1) / (2 - 3 * zz) * s * root * esig + (2 * zz - 1) / (3 * zz - 2)
                   for s in (1, -1)]
    best = None
    for u in u_cands:
        for s in (1, -1):
            x = s * xi
            a_c, b_c = _closed_algebraic_k(coin, zz, u, x, x * x)
            resid = abs(a_c - a1) + abs(b_c - b1)
            if best is None or resid < best[0]:
                best = (resid, x, u)
    return best[1], best[2]


def closed_form_trig(coin: CoinKind, k: int, z, prec: int = 60):
    """(a_k, b_k) from the angle form, via k-1 exact angle doublings."""
    if k < 1:
        raise ValueError("closed form defined for k >= 1")
    with mpmath.workdps(prec):
        (zz, cosw, cos_nu, sin_sigma, cos_sigma, cos_2nu, sin_2nu,
         b_inf, acoef, bcoef, den_c, a1, b1) = _fit_trig(coin, z, prec)
        if k == 1:
            return complex(a1), complex(b1)
        c, s = cos_2nu, sin_2nu
        for _ in range(k - 1):
            c, s = 2 * c * c - 1, 2 * s * c
        cks = c * cos_sigma - s * sin_sigma     # cos(2^k nu + sigma)
        if cks == 0:
            raise FlowSingularityError(f"cos(2^k nu + sigma) vanishes at k={k}, z={z!r}")
        a = acoef * cos_sigma / (den_c * cks)
        b = b_inf + bcoef * s / (den_c * cks)
        return complex(a), complex(b)


def closed_form(coin: CoinKind, k: int, z, prec: int = 60):
    """(a_k, b_k) from the algebraic xi/u form (repeated squaring of xi)."""
    if k < 1:
        raise ValueError("closed form defined for k >= 1")
    with mpmath.workdps(prec):
        tp = trig_params(coin, z, prec)
        zz = mpmath.mpc(complex(z))
        u = mpmath.mpc(tp.u)
        xh = mpmath.mpc(tp.xi)
        for _ in range(k - 1):
            xh = xh * xh
        a, b = _closed_algebraic_k(coin, zz, u, xh, xh * xh)
        return complex(a), complex(b)


def admissible_interval(coin: CoinKind) -> list:
    """cos(omega) boundary values of the pole-accumulation interval(s)."""
    if coin is CoinKind.GROVER:
        return [QQ(-1, 3)]
    return [QQ(1, 2), QQ(-5, 6)]


# ---------------------------------------------------------------------------
# fixed point and Jacobian

def fixed_point_pair(coin: CoinKind, z):
    """The non-trivial stationary pair of the scalar flow."""
    if coin is CoinKind.GROVER:
        return (1 - z) / (1 + 3 * z), 2 * (1 + z) / (1 + 3 * z)
    return 2 * (z - 1) / (3 * z - 2), (2 * z - 1) / (3 * z - 2)


_EXCLUDED_LINE = {
    CoinKind.GROVER: ((1.0, "the isolated observable pole z = 1 (trivial fixed point)"),
                      (-1.0 / 3.0, "fixed-point formulas singular at z = -1/3")),
    CoinKind.ROT60: ((1.0, "the isolated observable pole z = 1 (trivial fixed point)"),
                     (2.0 / 3.0, "fixed-point formulas singular at z = 2/3")),
}


def _check_excluded(coin, z, table, tol=1e-12):
    zc = complex(z)
    for bad, why in table[coin]:
        if abs(zc - complex(bad)) < tol:
            raise ExcludedPointError(z, why)


def _jet_jacobian(flow, a0, b0, z):
    """Exact first derivatives of the flow at (a0, b0) via order-1 jets."""
    a_dir = flow(Jet.seed(a0, 1.0, 1), Jet.const(b0, 1), z)
    b_dir = flow(Jet.const(a0, 1), Jet.seed(b0, 1.0, 1), z)
    return ((a_dir[0].coeff(1), b_dir[0].coeff(1)),
            (a_dir[1].coeff(1), b_dir[1].coeff(1)))


def fixed_point_line(coin: CoinKind, z) -> FixedPointReport:
    """Fixed point, Jacobian, eigenvalues and the walk dimension at z."""
    _check_excluded(coin, z, _EXCLUDED_LINE)
    zc = complex(z)
    a0, b0 = fixed_point_pair(coin, zc)
    a1, b1 = scalar_flow(coin, a0, b0, zc)
    residual = abs(a1 - a0) + abs(b1 - b0)
    J = _jet_jacobian(lambda a, b, zz: scalar_flow(coin, a, b, zz), a0, b0, zc)
    offdiag = max(abs(J[0][1]), abs(J[1][0]))
    lam1, lam2 = J[0][0], J[1][1]
    d_w = _walk_dimension(lam1, lam2)
    return FixedPointReport(
        model="line", coin=coin.value, z_fp=zc, a_inf=a0, b_inf=b0,
        jacobian=J, eigenvalues=(lam1, lam2), d_w=d_w,
        residual=residual, offdiag_max=offdiag)


def _walk_dimension(lam1, lam2) -> float:
    prod = complex(lam1) * complex(lam2)
    if abs(prod.imag) > 1e-9 * abs(prod):
        raise FlowSingularityError("complex eigenvalue product in walk dimension")
    import math
    return math.log(math.sqrt(prod.real)) / math.log(2.0)


# ---------------------------------------------------------------------------
# zeta expansion around a unit-circle fixed point

def _aitken(seq):
    """Aitken delta-squared limit of a geometric-corrected sequence."""
    if len(seq) < 3:
        return seq[-1]
    r0, r1, r2 = seq[-3], seq[-2], seq[-1]
    d = (r2 - r1) - (r1 - r0)
    if d == 0:
        return r2
    return r2 - (r2 - r1) ** 2 / d


def x11_jets(coin: CoinKind, a_jet: Jet, b_jet: Jet, z_fp: complex,
             drop: float = 1e-6) -> Jet:
    """Laurent jet of [X_k]_{11} from the scalar jets at frozen z = z_fp.

    The defining matrix is singular at zeta = 0 when (a, b) sits at the fixed
    point; the determinant's constant term is stripped when it is smaller than
    ``drop`` times the linear term, producing the zeta^{-1} window.
    """
    triple = ansatz_line_triple(coin, a_jet, b_jet, complex(z_fp))
    S = triple.A + triple.B + triple.M
    Mdef = Mat3.identity(one=Jet.const(1.0, a_jet.order), zero=Jet.const(0.0, a_jet.order)) - S
    det = Mdef.det()
    adj = Mdef.adjugate()
    c0, c1 = det.coeff(0), det.coeff(1)
    strip = abs(c0) <= drop * abs(c1) if c1 != 0 else False
    inv_det = det.inv(drop=drop) if strip else det.inv()
    return adj[0, 0] * inv_det


def zeta_expansion_line(coin: CoinKind, z_fp, k_list=None) -> ExpansionReport:
    return _zeta_expansion(
        model="line", coin=coin, z_fp=z_fp, k_list=k_list,
        flow=lambda a, b, z: scalar_flow(coin, a, b, z),
        fp_pair=lambda z: fixed_point_pair(coin, z),
        exclusion=lambda z: _check_excluded(coin, z, _EXCLUDED_LINE),
        x11=lambda a, b, z: x11_jets(coin, a, b, z),
        alpha2_expected=lambda z: 1 / (2 * fixed_point_pair(coin, z)[0]),
        alpha3_expected=lambda z: 1 / (6 * fixed_point_pair(coin, z)[0] ** 2),
    )


def _zeta_expansion(model, coin, z_fp, k_list, flow, fp_pair, exclusion, x11,
                    alpha2_expected, alpha3_expected) -> ExpansionReport:
    """Shared jet-iteration engine for both geometries."""
    exclusion(z_fp)
    zc = complex(z_fp)
    if k_list is None:
        k_list = list(range(8, 13))
    k_list = sorted(set(int(k) for k in k_list))
    k_max = max(k_list)
    a0, b0 = fp_pair(zc)

    def run(seed_a, seed_b):
        a = Jet.seed(a0, seed_a)
        b = Jet.seed(b0, seed_b)
        states = {0: (a, b)}
        for k in range(1, k_max + 1):
            a, b = flow(a, b, zc)
            states[k] = (a, b)
        return states

    run_ab = run(1.0, 1.0)
    run_a = run(1.0, 0.0)

    alpha_orders = {k: tuple(run_ab[k][0].coeff(i) for i in (1, 2, 3)) for k in k_list}
    beta_orders = {k: tuple(run_ab[k][1].coeff(i) for i in (1, 2, 3)) for k in k_list}

    lam1_seq = [abs(run_ab[k][0].coeff(1) / run_ab[k - 1][0].coeff(1))
                for k in range(k_max - 4, k_max + 1)]
    lam2_seq = [abs(run_ab[k][1].coeff(1) / run_ab[k - 1][1].coeff(1))
                for k in range(k_max - 4, k_max + 1)]
    lam1 = float(_aitken(lam1_seq))
    lam2 = float(_aitken(lam2_seq))

    pre2_seq = [run_a[k][0].coeff(2) / run_a[k][0].coeff(1) ** 2
                for k in range(k_max - 4, k_max + 1)]
    pre3_seq = [run_a[k][0].coeff(3) / run_a[k][0].coeff(1) ** 3
                for k in range(k_max - 4, k_max + 1)]
    alpha2_pref = complex(_aitken(pre2_seq))
    alpha3_pref = complex(_aitken(pre3_seq))

    beta2_seq = [run_ab[k][1].coeff(2) / (run_ab[k][0].coeff(1) * run_ab[k][1].coeff(1))
                 for k in range(k_max - 4, k_max + 1)]
    beta2_ratio = complex(_aitken(beta2_seq))

    x11_coeffs = {}
    x11_resp = {}
    for k in k_list:
        xa = x11(run_ab[k][0], run_ab[k][1], zc)
        xb = x11(run_a[k][0], run_a[k][1], zc)
        x11_coeffs[k] = {p: xa.coeff(p) for p in (-1, 0, 1)}
        x11_resp[k] = {p: xa.coeff(p) - xb.coeff(p) for p in (-1, 0, 1)}

    ks = sorted(x11_coeffs)
    rm1 = [abs(x11_coeffs[k][-1] / x11_coeffs[k - 1][-1])
           for k in ks[1:] if k - 1 in x11_coeffs and x11_coeffs[k - 1][-1] != 0]
    rp1_raw = [abs(x11_coeffs[k][1] / x11_coeffs[k - 1][1])
               for k in ks[1:] if k - 1 in x11_coeffs and x11_coeffs[k - 1][1] != 0]
    rp1_resp = [abs(x11_resp[k][1] / x11_resp[k - 1][1])
                for k in ks[1:] if k - 1 in x11_resp and x11_resp[k - 1][1] != 0]

    return ExpansionReport(
        model=model, coin=coin.value, z_fp=zc,
        lambda1=lam1, lambda2=lam2, k_list=k_list,
        alpha_orders=alpha_orders, beta_orders=beta_orders,
        alpha2_prefactor=alpha2_pref,
        alpha2_prefactor_expected=complex(alpha2_expected(zc)),
        alpha3_prefactor=alpha3_pref,
        alpha3_prefactor_expected=complex(alpha3_expected(zc)),
        beta2_ratio=beta2_ratio,
        x11_coeffs=x11_coeffs, x11_b_response=x11_resp,
        x11_ratio_minus1=float(_aitken(rm1)) if rm1 else float("nan"),
        x11_ratio_plus1_raw=float(_aitken(rp1_raw)) if rp1_raw else float("nan"),
        x11_ratio_plus1_b_response=float(_aitken(rp1_resp)) if rp1_resp else float("nan"),
        notes=[],
    )
