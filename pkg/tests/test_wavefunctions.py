import math

import numpy as np
import pytest
from scipy.integrate import quad

from shellpol import (Coupling, ground_state, homogeneous_pair,
                      homogeneous_pair_prime, matching_coefficients, p_state,
                      q0, q1, s_profile, s_profile_prime,
                      solve_matching_system, state_pair)
from shellpol.backend import kernels as K


# -- normalization (scipy.integrate.quad is the independent oracle) ---------

@pytest.mark.parametrize("ga", [2.0, 5.0, 12.0])
def test_q0_normalized(ga):
    s0 = ground_state(Coupling(-ga))
    cut = 1.0 + 40.0 / s0.x
    val = quad(lambda r: q0(r, s0) ** 2, 0.0, 1.0, epsabs=1e-13, epsrel=1e-12)[0] \
        + quad(lambda r: q0(r, s0) ** 2, 1.0, cut, epsabs=1e-13, epsrel=1e-12)[0]
    assert val == pytest.approx(1.0, abs=1e-10)


@pytest.mark.parametrize("ga", [5.0, 12.0])
def test_q1_normalized(ga):
    s1 = p_state(Coupling(-ga))
    cut = 1.0 + 40.0 / s1.x
    val = quad(lambda r: q1(r, s1) ** 2, 0.0, 1.0, epsabs=1e-13, epsrel=1e-12)[0] \
        + quad(lambda r: q1(r, s1) ** 2, 1.0, cut, epsabs=1e-13, epsrel=1e-12)[0]
    assert val == pytest.approx(1.0, abs=1e-10)


# -- boundary behavior -------------------------------------------------------

def test_q0_boundary_behavior():
    s0 = ground_state(Coupling(-2.0))
    # linear vanishing at the origin: Q0 ~ N0 e^{-x} x rho
    n0h = K.n0hat(s0.x)
    for rho in (1e-6, 1e-4):
        expect = n0h * math.exp(-s0.x) * s0.x * rho
        assert q0(rho, s0) == pytest.approx(expect, rel=1e-6)
    # exact branch agreement at the shell
    assert K.q0_eval(1.0, s0.x, n0h, -1) == K.q0_eval(1.0, s0.x, n0h, +1)
    # decay far outside
    assert abs(q0(1.0 + 60.0 / s0.x, s0)) < 1e-20


def test_q1_boundary_behavior():
    s1 = p_state(Coupling(-5.0))
    n1h = K.n1hat(s1.x)
    # quadratic vanishing at the origin: Q1 ~ const rho^2
    r1, r2 = 1e-5, 2e-5
    assert q1(r2, s1) / q1(r1, s1) == pytest.approx(4.0, rel=1e-8)
    assert K.q1_eval(1.0, s1.x, n1h, -1) == pytest.approx(
        K.q1_eval(1.0, s1.x, n1h, +1), rel=1e-15)


# -- homogeneous pair ---------------------------------------------------------

def test_homogeneous_pair_small_u_series():
    sa, sb = homogeneous_pair(1e-4)
    assert sa == pytest.approx((1e-4) ** 2 / 3.0, rel=1e-8)
    assert sb == pytest.approx(-1.0 / 1e-4 + 1e-4 / 2.0, rel=1e-12)


def _operator_residual(pick, u, h=1e-4):
    f = lambda t: homogeneous_pair(t)[pick]
    d2 = (f(u - h) - 2.0 * f(u) + f(u + h)) / (h * h)
    return d2 - (1.0 + 2.0 / (u * u)) * f(u)


@pytest.mark.parametrize("u", [0.45, 0.7, 1.0, 2.0, 5.0])
def test_regular_solution_satisfies_operator(u):
    # (-1 + d^2/du^2 - 2/u^2) s_a = 0, via central differences; stencil stays
    # on one side of the series switchover at u = 0.5
    res = _operator_residual(0, u)
    assert abs(res) < 1e-7 * max(1.0, abs(homogeneous_pair(u)[0]))


@pytest.mark.parametrize("u", [1.0, 2.0, 5.0])
def test_singular_partner_satisfies_operator(u):
    # s_b carries a 1/u pole, so its fourth derivative (~24/u^5) limits the
    # central-difference check to points away from the origin
    res = _operator_residual(1, u)
    assert abs(res) < 1e-7 * max(1.0, abs(homogeneous_pair(u)[1]))


@pytest.mark.parametrize("u", [0.3, 0.7, 1.0, 2.0, 5.0])
def test_wronskian_identity(u):
    # s_a s_b' - s_b s_a' = 1 exactly (no first-derivative term in the
    # operator, so the Wronskian is constant); equivalently u^2 W is constant
    # for the 1/u-reduced pair used in the radial equation.  The products
    # grow like e^{2u} while their difference stays 1, so the achievable
    # accuracy is eps times that magnitude.
    sa, sb = homogeneous_pair(u)
    sap, sbp = homogeneous_pair_prime(u)
    w = sa * sbp - sb * sap
    cancel = abs(sa * sbp) + abs(sb * sap)
    assert w == pytest.approx(1.0, abs=5e-15 * cancel)
    red_w = (sa / u) * (sbp / u - sb / u ** 2) - (sb / u) * (sap / u - sa / u ** 2)
    assert u * u * red_w == pytest.approx(1.0, abs=2e-14 * cancel)


def test_homogeneous_pair_rejects_nonpositive():
    with pytest.raises(ValueError):
        homogeneous_pair(0.0)
    with pytest.raises(ValueError):
        homogeneous_pair(-1.0)


# -- matching coefficients ----------------------------------------------------

@pytest.mark.parametrize("ga", [1.5, 2.0, 5.0, 12.0])
def test_matching_against_direct_solve(ga):
    c = Coupling(-ga)
    s0 = ground_state(c)
    closed = matching_coefficients(c, s0)
    direct = solve_matching_system(c, s0)
    assert closed.c_scaled == pytest.approx(direct.c_scaled, rel=1e-10)
    assert closed.d_scaled == pytest.approx(direct.d_scaled, rel=1e-10)


def test_matching_raw_values_moderate_well():
    # raw C, D and source amplitudes stay representable for moderate wells
    c = Coupling(-2.0)
    s0 = ground_state(c)
    mc = matching_coefficients(c, s0)
    assert mc.c == pytest.approx(mc.c_scaled * math.exp(-s0.x), rel=1e-15)
    assert mc.d == pytest.approx(mc.d_scaled * math.exp(s0.x), rel=1e-15)
    assert mc.g1 == pytest.approx(-mc.ntilde * math.exp(-s0.x), rel=1e-15)
    assert mc.g2 == pytest.approx(-mc.ntilde * math.sinh(s0.x), rel=1e-15)


# -- assembled dipole profile -------------------------------------------------

@pytest.mark.parametrize("ga", [1.5, 2.0, 5.0, 12.0])
def test_s_continuity_and_jump(ga, pipeline):
    c, s0, _, coeffs = pipeline(ga)
    s_in = K.s_eval(1.0, s0.x, c.gamma, coeffs.ntilde, coeffs.c_scaled,
                    coeffs.d_scaled, -1)
    s_out = K.s_eval(1.0, s0.x, c.gamma, coeffs.ntilde, coeffs.c_scaled,
                     coeffs.d_scaled, +1)
    assert abs(s_in - s_out) <= 1e-10 * abs(s_in)
    jump = s_profile_prime(1.0, c, s0, coeffs, +1) \
        - s_profile_prime(1.0, c, s0, coeffs, -1)
    assert jump == pytest.approx(c.gamma * s_in, rel=1e-8)


def test_s_regular_at_origin(pipeline):
    c, s0, _, coeffs = pipeline(2.0)
    # O(rho^2) vanishing, checked through the series branch
    v1 = s_profile(1e-5, c, s0, coeffs)
    v2 = s_profile(2e-5, c, s0, coeffs)
    assert v2 / v1 == pytest.approx(4.0, rel=1e-6)


def test_s_decays_outside(pipeline):
    # at the quadrature truncation point rho = 1 + 40/x the profile is dead
    # (e^{-x(rho-1)} beats the rho^2 growth of the bracket by ~15 orders)
    c, s0, _, coeffs = pipeline(2.0)
    peak = max(abs(s_profile(r, c, s0, coeffs)) for r in np.linspace(0.1, 3, 40))
    assert abs(s_profile(1.0 + 40.0 / s0.x, c, s0, coeffs)) < 1e-10 * peak


@pytest.mark.parametrize("ga", [2.0, 5.0, 12.0])
def test_s_satisfies_radial_equation(ga, pipeline):
    # (-x^2 + d2/drho2 - 2/rho^2) S = -rho Q0 / sqrt(4 pi), both regions
    c, s0, _, coeffs = pipeline(ga)
    x = s0.x
    n0h = K.n0hat(x)
    h = min(1e-4, 3.2e-4 / max(x, 1.0))
    pts = [0.2, 0.5, 0.8] + [1.0 + 2.0 / x, 1.0 + 5.0 / x]
    for r in pts:
        f = lambda t: s_profile(t, c, s0, coeffs)
        d2 = (f(r - h) - 2.0 * f(r) + f(r + h)) / (h * h)
        lhs = d2 - (x * x + 2.0 / (r * r)) * f(r)
        rhs = -r * K.q0_eval(r, x, n0h) / K.SQRT_4PI
        assert abs(lhs - rhs) < 1e-6 * max(abs(rhs), coeffs.ntilde)


def test_profiles_finite_for_very_deep_well():
    c = Coupling(-1000.0)
    s0, s1 = state_pair(c)
    assert s0.x == pytest.approx(500.0, abs=1e-9)
    coeffs = matching_coefficients(c, s0)
    for r in (0.1, 0.5, 0.99, 1.0, 1.01, 1.2, 2.0):
        assert math.isfinite(s_profile(r, c, s0, coeffs))
        assert math.isfinite(q0(r, s0))
        assert math.isfinite(q1(r, s1))
