# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of ``shellpol._kernels_py``.

Same reduced-unit conventions, same scaled-hyperbolic forms, same series
switchovers, same adaptive Simpson logic.  Keep the arithmetic in lockstep
with the pure-Python module; the backend parity tests compare the two.
"""
from libc.math cimport exp, expm1, cosh, sinh, sqrt, fabs

import math

SQRT_4PI = 2.0 * math.sqrt(math.pi)

cdef double _SQRT_4PI = SQRT_4PI
cdef double _CUT = 0.5

cdef double[9] _SA = [0.3333333333333333, 0.03333333333333333,
    0.0011904761904761906, 2.2045855379188714e-05, 2.505210838544172e-07,
    1.9270852604185937e-09, 1.0706029224547743e-11, 4.498331606952833e-14,
    1.4797143443923793e-16]
cdef double[9] _SAP = [0.6666666666666666, 0.13333333333333333,
    0.007142857142857143, 0.0001763668430335097, 2.505210838544172e-06,
    2.3125023125023126e-08, 1.498844091436684e-10, 7.197330571124533e-13,
    2.6634858199062827e-15]
cdef double[9] _SB = [0.5, 0.125, 0.006944444444444444,
    0.00017361111111111112, 2.48015873015873e-06, 2.296443268665491e-08,
    1.4911969277048643e-10, 7.169215998581078e-13, 2.6552651846596585e-15]
cdef double[9] _SBP = [0.5, 0.375, 0.034722222222222224,
    0.0012152777777777778, 2.232142857142857e-05, 2.52608759553204e-07,
    1.9385560060163236e-09, 1.0753823997871616e-11, 4.5139508139214194e-14]
cdef double[10] _G1 = [1.0, 0.9, 0.07976190476190476, 0.002711640211640212,
    4.8851611351611354e-05, 5.45365128698462e-07, 4.1432333098999765e-09,
    2.2806541247250864e-11, 9.514563234443e-14, 3.1120976290792103e-16]
cdef double[10] _G1P = [2.0, 3.6, 0.4785714285714286, 0.021693121693121695,
    0.0004885161135161135, 6.544381544381545e-06, 5.8005266338599675e-08,
    3.649046599560138e-10, 1.7126213821997399e-12, 6.224195258158421e-15]
cdef double[23] _FN0 = [2.0, -2.6666666666666665, 2.0, -1.0666666666666667,
    0.4444444444444444, -0.1523809523809524, 0.044444444444444446,
    -0.011287477954144622, 0.0025396825396825397, -0.0005130671797338464,
    9.406231628453851e-05, -1.578668245334912e-05, 2.4431770463516497e-06,
    -3.5081516562998043e-07, 4.698417396830095e-08, -5.896053203865217e-09,
    6.960618365674215e-10, -7.757964741927918e-11, 8.188962783146136e-12,
    -8.209486499394622e-13, 7.836328022149411e-14, -7.138683912517063e-15,
    6.219307954086835e-16]
cdef double[22] _GN1 = [0.5333333333333333, 0.4, 0.19047619047619047,
    0.06984126984126984, 0.021164021164021163, 0.005502645502645503,
    0.0012570145903479236, 0.0002565335898669232, 4.736004736004736e-05,
    7.987309574611161e-06, 1.2403821927631451e-06, 1.7853986107954363e-07,
    2.3952716140702448e-08, 3.009443822806205e-09, 3.5557338400502955e-10,
    3.965181979207603e-11, 4.186838114691257e-12, 4.1980328690086135e-13,
    4.007397559981169e-14, 3.650463364355316e-15, 3.1799591973939643e-16,
    2.6541260700383952e-17]
cdef double[24] _T = [0.6666666666666666, 0.6666666666666666, 0.4,
    0.17777777777777778, 0.06349206349206349, 0.01904761904761905,
    0.0049382716049382715, 0.001128747795414462, 0.00023088023088023088,
    4.275559831115387e-05, 7.235562791118347e-06, 1.1276201752392229e-06,
    1.6287846975677663e-07, 2.1925947851873777e-08, 2.763774939311821e-09,
    3.275585113258454e-10, 3.6634833503548504e-11, 3.878982370963959e-12,
    3.8995060872124456e-13, 3.731584772452101e-14, 3.4070991400649618e-15,
    2.9744516302154426e-16, 2.487723181634734e-17, 1.9968346608439335e-18]


cdef inline double _poly(const double* coeffs, int n, double z) noexcept nogil:
    cdef double acc = 0.0
    cdef int i
    for i in range(n - 1, -1, -1):
        acc = acc * z + coeffs[i]
    return acc


cdef double _fn0(double x) noexcept nogil:
    if x >= _CUT:
        return 1.0 - (1.0 + 2.0 * x) * exp(-2.0 * x)
    return x * x * _poly(&_FN0[0], 23, x)


cdef double _fn1(double x) noexcept nogil:
    if x >= _CUT:
        return x * x - 3.0 + (((2.0 * x + 5.0) * x + 6.0) * x + 3.0) * exp(-2.0 * x)
    cdef double x2 = x * x
    return exp(-2.0 * x) * (x2 * x2 * x) * _poly(&_GN1[0], 22, x)


cdef double _n0hat(double x) noexcept nogil:
    return 2.0 * sqrt(x / _fn0(x))


cdef double _n1hat(double x) noexcept nogil:
    return 2.0 * x * sqrt(x / _fn1(x))


cdef double _sa_raw(double u) noexcept nogil:
    cdef double z
    if u >= _CUT:
        return cosh(u) - sinh(u) / u
    z = u * u
    return z * _poly(&_SA[0], 9, z)


cdef double _sb_raw(double u) noexcept nogil:
    cdef double z
    if u >= _CUT:
        return sinh(u) - cosh(u) / u
    z = u * u
    return (z * _poly(&_SB[0], 9, z) - 1.0) / u


cdef double _sa_prime_raw(double u) noexcept nogil:
    cdef double z
    if u >= _CUT:
        return sinh(u) - cosh(u) / u + sinh(u) / (u * u)
    z = u * u
    return u * _poly(&_SAP[0], 9, z)


cdef double _sb_prime_raw(double u) noexcept nogil:
    cdef double z
    if u >= _CUT:
        return cosh(u) - sinh(u) / u + cosh(u) / (u * u)
    z = u * u
    return 1.0 / z + _poly(&_SBP[0], 9, z)


cdef double _sa_scaled(double u) noexcept nogil:
    cdef double z
    if u >= _CUT:
        return 0.5 * ((1.0 - 1.0 / u) + (1.0 + 1.0 / u) * exp(-2.0 * u))
    z = u * u
    return z * _poly(&_SA[0], 9, z) * exp(-u)


cdef double _sa_prime_scaled(double u) noexcept nogil:
    cdef double e2, z
    if u >= _CUT:
        e2 = exp(-2.0 * u)
        return 0.5 * ((1.0 - e2) - (1.0 + e2) / u + (1.0 - e2) / (u * u))
    z = u * u
    return u * _poly(&_SAP[0], 9, z) * exp(-u)


cdef double _g1_scaled(double u) noexcept nogil:
    cdef double e2, z
    if u >= _CUT:
        e2 = exp(-2.0 * u)
        return 0.5 * ((2.0 * u * u - 3.0) * (1.0 + e2) + 3.0 * (1.0 - e2) / u)
    z = u * u
    return z * _poly(&_G1[0], 10, z) * exp(-u)


cdef double _g1_prime_scaled(double u) noexcept nogil:
    cdef double e2, z
    if u >= _CUT:
        e2 = exp(-2.0 * u)
        return (2.0 * u * (1.0 + e2) + (u * u - 1.5) * (1.0 - e2)
                + 1.5 * ((1.0 + e2) - (1.0 - e2) / u) / u)
    z = u * u
    return u * _poly(&_G1P[0], 10, z) * exp(-u)


cdef double _u_factor(double x) noexcept nogil:
    if x >= _CUT:
        return (x - 1.0) + (1.0 + x) * exp(-2.0 * x)
    return exp(-2.0 * x) * (x * x * x) * _poly(&_T[0], 24, x)


cdef double _p_shell(double x, double gamma) noexcept nogil:
    cdef double x3 = x * x * x
    return 2.0 * x3 + gamma * (1.0 + x) * _u_factor(x)


cdef double _c_scaled(double x, double gamma, double ntil) noexcept nogil:
    cdef double e2 = exp(-2.0 * x)
    cdef double x3 = x * x * x
    cdef double a0 = x3 * ((2.0 * x + 6.0) * x + 3.0)
    cdef double sc = a0 + gamma * (1.0 + x) * (x3 * (1.0 + e2) - 3.0 * x * _sa_scaled(x))
    return ntil * sc / (4.0 * x3 * _p_shell(x, gamma))


cdef double _d_scaled(double x, double gamma, double ntil) noexcept nogil:
    cdef double e2 = exp(-2.0 * x)
    cdef double x2 = x * x
    cdef double x3 = x2 * x
    cdef double x4 = x3 * x
    cdef double x5 = x4 * x
    cdef double w4 = 2.0 * gamma * x4 - 2.0 * gamma * x3 - 3.0 * gamma * x2 \
        + 3.0 * gamma + 4.0 * x5 - 12.0 * x4 + 6.0 * x3
    cdef double w2 = 4.0 * gamma * x3 - 6.0 * gamma * x - 6.0 * gamma \
        - 4.0 * x5 - 12.0 * x4 - 6.0 * x3
    cdef double w0 = -2.0 * gamma * x4 - 2.0 * gamma * x3 + 3.0 * gamma * x2 \
        + 6.0 * gamma * x + 3.0 * gamma
    cdef double num = w4 + (w2 + w0 * e2) * e2
    return -ntil * num / (16.0 * x3 * _p_shell(x, gamma))


cdef double _alpha_closed(double x, double gamma) noexcept nogil:
    cdef double e2 = exp(-2.0 * x)
    cdef double x2 = x * x
    cdef double x3 = x2 * x
    cdef double x4 = x3 * x
    cdef double x5 = x4 * x
    cdef double x6 = x5 * x
    cdef double v0 = gamma * (8.0 * x5 + 8.0 * x4 - 10.0 * x3 - 21.0 * x2
                              - 12.0 * x - 3.0)
    cdef double v2 = 2.0 * (8.0 * x6 + 24.0 * x5 + 30.0 * x4 + 15.0 * x3
                            + gamma * (4.0 * x5 + 2.0 * x4 - x3 + 6.0 * x2
                                       + 6.0 * x + 3.0))
    cdef double v4 = 24.0 * x5 + 4.0 * gamma * x4 - 30.0 * x3 \
        - 3.0 * gamma * x2 - 3.0 * gamma
    cdef double num = v4 + (v2 + v0 * e2) * e2
    return (2.0 / 3.0) * num / (16.0 * x4 * _fn0(x) * _p_shell(x, gamma))


cdef double _alpha_b_closed(double x0, double x1) noexcept nogil:
    cdef double e0 = exp(-2.0 * x0)
    cdef double e1 = exp(-2.0 * x1)
    cdef double c1 = -2.0 - 2.0 * x0 - x0 * x0 + x1 * x1
    cdef double dx = x0 - x1
    cdef double sx = x0 + x1
    cdef double cd = dx * dx * (-x0 - 2.0 * x1 + sx * x1 * x1)
    cdef double c0 = (1.0 + x1) * (x0 * x0 * (1.0 + x1) - x1 * x1 * (3.0 + x1))
    cdef double br = -(x1 * x1 * x1) * c1 * e0 + cd + x0 * c0 * e1
    cdef double dx2 = dx * dx
    cdef double sx2 = sx * sx
    cdef double dx5 = dx2 * dx2 * dx
    cdef double sx5 = sx2 * sx2 * sx
    cdef double dd = dx5 * x1 * sx5 * _fn0(x0) * _fn1(x1)
    return (8.0 / 3.0) * x0 * br * br / dd


cdef double _resid_l0(double t, double gamma_abs) noexcept nogil:
    return 2.0 * t / gamma_abs + expm1(-2.0 * t)


cdef double _resid_l1(double t, double gamma_abs) noexcept nogil:
    return t / gamma_abs - (1.0 + 1.0 / t) * _sa_scaled(t)


cdef double _q0_eval(double rho, double x, double n0h, int branch) noexcept nogil:
    if branch < 0 or (branch == 0 and rho <= 1.0):
        return 0.5 * n0h * exp(x * (rho - 1.0)) * (-expm1(-2.0 * x * rho))
    return 0.5 * n0h * exp(-x * (rho - 1.0)) * (-expm1(-2.0 * x))


cdef double _q0_prime(double rho, double x, double n0h, int branch) noexcept nogil:
    if branch < 0 or (branch == 0 and rho <= 1.0):
        return 0.5 * n0h * x * exp(x * (rho - 1.0)) * (1.0 + exp(-2.0 * x * rho))
    return -0.5 * n0h * x * exp(-x * (rho - 1.0)) * (-expm1(-2.0 * x))


cdef double _q1_eval(double rho, double x1, double n1h, int branch) noexcept nogil:
    cdef double u = x1 * rho
    if branch < 0 or (branch == 0 and rho <= 1.0):
        return n1h * (1.0 + 1.0 / x1) * exp(x1 * (rho - 1.0)) * _sa_scaled(u)
    return n1h * _sa_scaled(x1) * (1.0 + 1.0 / u) * exp(-x1 * (rho - 1.0))


cdef double _q1_prime(double rho, double x1, double n1h, int branch) noexcept nogil:
    cdef double u = x1 * rho
    if branch < 0 or (branch == 0 and rho <= 1.0):
        return n1h * (1.0 + 1.0 / x1) * x1 * exp(x1 * (rho - 1.0)) * _sa_prime_scaled(u)
    return (-n1h * _sa_scaled(x1) * x1 * (1.0 + (1.0 + 1.0 / u) / u)
            * exp(-x1 * (rho - 1.0)))


cdef double _s_eval(double rho, double x, double gamma, double ntil,
                    double c_s, double d_s, int branch) noexcept nogil:
    cdef double u = x * rho
    cdef double k, h
    if branch < 0 or (branch == 0 and rho <= 1.0):
        return exp(x * (rho - 1.0)) * (
            c_s * _sa_scaled(u) - ntil * _g1_scaled(u) / (8.0 * (x * x * x)))
    k = ntil * (-expm1(-2.0 * x)) / (16.0 * (x * x * x))
    h = d_s * (1.0 + 1.0 / u) - k * ((3.0 / u + 3.0) - 2.0 * u * u)
    return exp(-x * (rho - 1.0)) * h


cdef double _s_prime(double rho, double x, double gamma, double ntil,
                     double c_s, double d_s, int branch) noexcept nogil:
    cdef double u = x * rho
    cdef double k, h, hp
    if branch < 0 or (branch == 0 and rho <= 1.0):
        return x * exp(x * (rho - 1.0)) * (
            c_s * _sa_prime_scaled(u) - ntil * _g1_prime_scaled(u) / (8.0 * (x * x * x)))
    k = ntil * (-expm1(-2.0 * x)) / (16.0 * (x * x * x))
    h = d_s * (1.0 + 1.0 / u) - k * ((3.0 / u + 3.0) - 2.0 * u * u)
    hp = -d_s / (u * u) - k * (-3.0 / (u * u) - 4.0 * u)
    return x * exp(-x * (rho - 1.0)) * (hp - h)


# ---------------------------------------------------------------------------
# adaptive Simpson
# ---------------------------------------------------------------------------

cdef double _feval(int kind, const double* p, double rho) noexcept nogil:
    cdef double v
    if kind == 0:
        return rho * _q0_eval(rho, p[0], p[5], 0) \
            * _s_eval(rho, p[0], p[1], p[2], p[3], p[4], 0)
    if kind == 1:
        v = _q0_eval(rho, p[0], p[1], 0)
        return v * v
    if kind == 2:
        v = _q1_eval(rho, p[0], p[1], 0)
        return v * v
    v = _q0_eval(rho, p[0], p[1], 0)
    return rho * v * _q1_eval(rho, p[2], p[3], 0)


cdef double _adsimp(int kind, const double* p, double a, double fa, double m,
                    double fm, double b, double fb, double whole, double tol,
                    int depth) noexcept nogil:
    cdef double lm = 0.5 * (a + m)
    cdef double rm = 0.5 * (m + b)
    cdef double flm = _feval(kind, p, lm)
    cdef double frm = _feval(kind, p, rm)
    cdef double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm)
    cdef double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb)
    cdef double err = (left + right - whole) / 15.0
    if depth <= 0 or fabs(err) <= tol:
        return left + right + err
    cdef double half = 0.5 * tol
    return (_adsimp(kind, p, a, fa, lm, flm, m, fm, left, half, depth - 1)
            + _adsimp(kind, p, m, fm, rm, frm, b, fb, right, half, depth - 1))


cdef double _integrate(int kind, double a, double b, double rel_tol,
                       const double* p, int max_depth) noexcept nogil:
    cdef double m, fa, fm, fb, whole, rough, scale
    if b <= a:
        return 0.0
    m = 0.5 * (a + b)
    fa = _feval(kind, p, a)
    fm = _feval(kind, p, m)
    fb = _feval(kind, p, b)
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    if whole == 0.0 and fa == 0.0 and fm == 0.0 and fb == 0.0:
        return 0.0
    rough = _adsimp(kind, p, a, fa, m, fm, b, fb, whole,
                    1e-3 * fabs(whole), max_depth)
    scale = fabs(rough)
    if scale == 0.0:
        return 0.0
    return _adsimp(kind, p, a, fa, m, fm, b, fb, whole,
                   rel_tol * scale, max_depth)


# ---------------------------------------------------------------------------
# Python-visible wrappers
# ---------------------------------------------------------------------------

def fn0(double x):
    """1 - (1 + 2x) e^{-2x}; equals 4x / N0hat^2."""
    return _fn0(x)

def fn1(double x):
    """x^2 - 3 + (2x^3 + 5x^2 + 6x + 3) e^{-2x}; equals 4x^3 / N1hat^2."""
    return _fn1(x)

def n0hat(double x):
    """Ground-state normalization in rho units: int Q0^2 drho = 1."""
    return _n0hat(x)

def n1hat(double x):
    """l=1 normalization in rho units: int Q1^2 drho = 1."""
    return _n1hat(x)

def sa_raw(double u):
    """s_a(u) = cosh u - sinh u / u (regular at the origin)."""
    return _sa_raw(u)

def sb_raw(double u):
    """s_b(u) = sinh u - cosh u / u (singular ~ -1/u at the origin)."""
    return _sb_raw(u)

def sa_prime_raw(double u):
    return _sa_prime_raw(u)

def sb_prime_raw(double u):
    return _sb_prime_raw(u)

def sa_scaled(double u):
    """s_a(u) e^{-u}, bounded for all u >= 0."""
    return _sa_scaled(u)

def sa_prime_scaled(double u):
    """s_a'(u) e^{-u}."""
    return _sa_prime_scaled(u)

def g1_scaled(double u):
    """[(2u^2 - 3) cosh u + 3 sinh u / u] e^{-u}: the interior source bracket."""
    return _g1_scaled(u)

def g1_prime_scaled(double u):
    """d/du of the interior source bracket, times e^{-u}."""
    return _g1_prime_scaled(u)

def u_factor(double x):
    """(x - 1) + (1 + x) e^{-2x}; cancels to (2/3) x^3 e^{-2x} at small x."""
    return _u_factor(x)

def p_shell(double x, double gamma):
    """e^{-2x} times the shared matching denominator bracket."""
    return _p_shell(x, gamma)

def c_scaled(double x, double gamma, double ntil):
    """C e^{x}: interior homogeneous-solution coefficient, overflow-safe."""
    return _c_scaled(x, gamma, ntil)

def d_scaled(double x, double gamma, double ntil):
    """D e^{-x}: exterior homogeneous-solution coefficient, overflow-safe."""
    return _d_scaled(x, gamma, ntil)

def alpha_closed(double x, double gamma):
    """Closed-form dimensionless polarizability alpha * hbar^2/(2 m q^2 r0^4)."""
    return _alpha_closed(x, gamma)

def alpha_b_closed(double x0, double x1):
    """Closed-form dimensionless bound-to-bound polarizability."""
    return _alpha_b_closed(x0, x1)

def resid_l0(double t, double gamma_abs):
    """2t/|gamma| - (1 - e^{-2t}): zero at the l=0 wavenumber."""
    return _resid_l0(t, gamma_abs)

def resid_l1(double t, double gamma_abs):
    """t/|gamma| - (1 + 1/t) s_a(t) e^{-t}: zero at the l=1 wavenumber."""
    return _resid_l1(t, gamma_abs)

def q0_eval(double rho, double x, double n0h, int branch=0):
    return _q0_eval(rho, x, n0h, branch)

def q0_prime(double rho, double x, double n0h, int branch=0):
    return _q0_prime(rho, x, n0h, branch)

def q1_eval(double rho, double x1, double n1h, int branch=0):
    return _q1_eval(rho, x1, n1h, branch)

def q1_prime(double rho, double x1, double n1h, int branch=0):
    return _q1_prime(rho, x1, n1h, branch)

def s_eval(double rho, double x, double gamma, double ntil, double c_s,
           double d_s, int branch=0):
    """Reduced first-order dipole profile S(rho), assembled from the matching
    coefficients in scaled form (c_s = C e^x, d_s = D e^{-x})."""
    return _s_eval(rho, x, gamma, ntil, c_s, d_s, branch)

def s_prime(double rho, double x, double gamma, double ntil, double c_s,
            double d_s, int branch=0):
    """dS/drho with the same branch convention as s_eval."""
    return _s_prime(rho, x, gamma, ntil, c_s, d_s, branch)


KIND_RQ0S = 0
KIND_Q0SQ = 1
KIND_Q1SQ = 2
KIND_RQ0Q1 = 3


def integrate(int kind, double a, double b, double rel_tol, double p0,
              double p1, double p2=0.0, double p3=0.0, double p4=0.0,
              double p5=0.0, int max_depth=60):
    """Adaptive Simpson integral of the selected integrand over [a, b]."""
    cdef double[6] p
    p[0] = p0; p[1] = p1; p[2] = p2; p[3] = p3; p[4] = p4; p[5] = p5
    cdef double out
    with nogil:
        out = _integrate(kind, a, b, rel_tol, &p[0], max_depth)
    return out
