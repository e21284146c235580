"""The cross-validation suite behind ``shellpol verify``.

Every check pits one computational route against an independent one
(closed form vs finite differences, analytic derivatives vs jump condition,
appendix-style coefficients vs a direct 2x2 solve) or asserts an exact
structural property.  A transcription error in any closed form cannot pass,
because its counterpart never touches the same expressions.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence

from . import oracle
from .backend import kernels as K
from .model import Coupling, PhysicalParams, build_report
from .polarizability import (alpha_bound_bound, alpha_closed_form,
                             alpha_regions, compute_breakdown, delta_e0,
                             exterior_cutoff)
from .spectrum import NoBoundState, NoPState, ground_state, p_state, state_pair
from .wavefunctions import (matching_coefficients, s_profile, s_profile_prime,
                            solve_matching_system, MatchingCoefficients)

DEFAULT_GRID = (1.2, 1.5, 2.0, 3.0, 5.0, 8.0, 12.0, 20.0)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    worst: float
    tolerance: float
    detail: str

    def row(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"{status:4}  {self.name:28}  worst={self.worst:11.4e}  "
                f"tol={self.tolerance:8.1e}  {self.detail}")


def _perturbed_coeffs(coupling, state0, perturb):
    coeffs = matching_coefficients(coupling, state0)
    if perturb:
        coeffs = MatchingCoefficients(
            x0=coeffs.x0, gamma=coeffs.gamma, ntilde=coeffs.ntilde,
            c_scaled=coeffs.c_scaled * (1.0 + perturb),
            d_scaled=coeffs.d_scaled)
    return coeffs


def check_spectrum_residuals(grid, tol_root) -> CheckResult:
    worst = 0.0
    for ga in grid:
        c = Coupling(-ga)
        s0, s1 = state_pair(c, tol=tol_root)
        worst = max(worst, abs(s0.residual))
        if s1 is not None:
            worst = max(worst, abs(s1.residual))
            if not s1.x < s0.x:
                return CheckResult("spectrum-residuals", False, s1.x - s0.x,
                                   0.0, f"x1 >= x0 at |gamma|={ga}")
    return CheckResult("spectrum-residuals", worst < tol_root, worst, tol_root,
                       "transcendental-equation residuals at returned roots")


def check_spectrum_thresholds(tol_root) -> CheckResult:
    ok = True
    notes = []
    for ga, exc in ((1.0, NoBoundState), (0.5, NoBoundState)):
        try:
            ground_state(Coupling(-ga), tol=tol_root)
            ok = False
            notes.append(f"l=0 root found at |gamma|={ga}")
        except exc:
            pass
    try:
        ground_state(Coupling(-(1.0 + 1e-6)), tol=tol_root)
    except NoBoundState:
        ok = False
        notes.append("no l=0 root just above threshold")
    for ga in (3.0, 2.0):
        try:
            p_state(Coupling(-ga), tol=tol_root)
            ok = False
            notes.append(f"l=1 root found at |gamma|={ga}")
        except NoPState:
            pass
    try:
        p_state(Coupling(-(3.0 + 1e-4)), tol=tol_root)
    except NoPState:
        ok = False
        notes.append("no l=1 root just above threshold")
    return CheckResult("spectrum-thresholds", ok, 0.0, 0.0,
                       "; ".join(notes) or "strict thresholds at 1 and 3")


def check_normalizations(grid, tol=1e-8, quad_tol=1e-12) -> CheckResult:
    worst = 0.0
    for ga in grid:
        c = Coupling(-ga)
        s0, s1 = state_pair(c)
        x = s0.x
        n0h = K.n0hat(x)
        cut = exterior_cutoff(x)
        norm0 = K.integrate(K.KIND_Q0SQ, 0.0, 1.0, quad_tol, x, n0h) \
            + K.integrate(K.KIND_Q0SQ, 1.0, cut, quad_tol, x, n0h)
        worst = max(worst, abs(norm0 - 1.0))
        if s1 is not None:
            n1h = K.n1hat(s1.x)
            cut1 = 1.0 + 40.0 / s1.x
            norm1 = K.integrate(K.KIND_Q1SQ, 0.0, 1.0, quad_tol, s1.x, n1h) \
                + K.integrate(K.KIND_Q1SQ, 1.0, cut1, quad_tol, s1.x, n1h)
            worst = max(worst, abs(norm1 - 1.0))
    return CheckResult("normalization", worst < tol, worst, tol,
                       "int Q^2 drho = 1 by adaptive quadrature")


def check_continuity_and_jumps(grid, perturb=0.0) -> CheckResult:
    worst_cont = 0.0
    worst_jump = 0.0
    for ga in grid:
        c = Coupling(-ga)
        s0, s1 = state_pair(c)
        coeffs = _perturbed_coeffs(c, s0, perturb)
        x = s0.x
        n0h = K.n0hat(x)
        # Q0: continuity exact by construction; jump from analytic one-sided
        # derivatives must equal gamma * Q0(1).
        q0_1 = K.q0_eval(1.0, x, n0h)
        jump0 = K.q0_prime(1.0, x, n0h, +1) - K.q0_prime(1.0, x, n0h, -1)
        worst_jump = max(worst_jump, abs(jump0 - c.gamma * q0_1) / abs(c.gamma * q0_1))
        if s1 is not None:
            n1h = K.n1hat(s1.x)
            q1_1 = K.q1_eval(1.0, s1.x, n1h)
            jump1 = K.q1_prime(1.0, s1.x, n1h, +1) - K.q1_prime(1.0, s1.x, n1h, -1)
            worst_jump = max(worst_jump,
                             abs(jump1 - c.gamma * q1_1) / abs(c.gamma * q1_1))
        s_in = K.s_eval(1.0, x, c.gamma, coeffs.ntilde, coeffs.c_scaled,
                        coeffs.d_scaled, -1)
        s_out = K.s_eval(1.0, x, c.gamma, coeffs.ntilde, coeffs.c_scaled,
                         coeffs.d_scaled, +1)
        worst_cont = max(worst_cont, abs(s_in - s_out) / abs(s_in))
        jmp = s_profile_prime(1.0, c, s0, coeffs, +1) \
            - s_profile_prime(1.0, c, s0, coeffs, -1)
        worst_jump = max(worst_jump, abs(jmp - c.gamma * s_in) / abs(c.gamma * s_in))
    ok = worst_cont < 1e-10 and worst_jump < 1e-8
    return CheckResult("continuity-and-jumps", ok, max(worst_cont, worst_jump),
                       1e-8, f"S continuity {worst_cont:.2e}, derivative "
                       f"jumps vs gamma*value {worst_jump:.2e}")


def check_matching_2x2(grid, tol=1e-10, perturb=0.0) -> CheckResult:
    worst = 0.0
    for ga in grid:
        c = Coupling(-ga)
        s0 = ground_state(c)
        closed = _perturbed_coeffs(c, s0, perturb)
        direct = solve_matching_system(c, s0)
        worst = max(worst,
                    abs(closed.c_scaled - direct.c_scaled) / abs(direct.c_scaled),
                    abs(closed.d_scaled - direct.d_scaled) / abs(direct.d_scaled))
    return CheckResult("matching-2x2", worst < tol, worst, tol,
                       "closed-form C, D vs direct linear matching solve")


def _fd_ode_residual(f: Callable[[float], float], lhs_scale: Callable[[float], float],
                     rhs: Callable[[float], float], pts: Sequence[float],
                     x: float, h: Optional[float] = None) -> float:
    """Scaled finite-difference residual of (-x^2 + d2/drho2 - 2/rho^2) f = rhs.

    The step balances O(h^2 x^4) truncation against O(eps/h^2) rounding,
    which matters once x exceeds a few units.
    """
    if h is None:
        h = min(1e-4, 3.2e-4 / max(x, 1.0))
    worst = 0.0
    for r in pts:
        d2 = (f(r - h) - 2.0 * f(r) + f(r + h)) / (h * h)
        lhs = d2 - (x * x + 2.0 / (r * r)) * f(r)
        scale = max(abs(rhs(r)), lhs_scale(r))
        worst = max(worst, abs(lhs - rhs(r)) / scale)
    return worst


def check_ode_residuals(grid, tol=1e-6, perturb=0.0) -> CheckResult:
    worst = 0.0
    inner_pts = [0.08, 0.2, 0.35, 0.5, 0.62, 0.75, 0.8, 0.85, 0.9, 0.95]
    for ga in grid:
        c = Coupling(-ga)
        s0, s1 = state_pair(c)
        x = s0.x
        n0h = K.n0hat(x)
        coeffs = _perturbed_coeffs(c, s0, perturb)
        outer_pts = [1.0 + t * (exterior_cutoff(x) - 1.0) / 12.0
                     for t in (0.3, 0.8, 1.5, 2.2, 3.0, 3.9, 4.7, 5.5, 6.5, 8.0)]

        def s_fun(r):
            return K.s_eval(r, x, c.gamma, coeffs.ntilde, coeffs.c_scaled,
                            coeffs.d_scaled)

        def src(r):
            return -r * K.q0_eval(r, x, n0h) / K.SQRT_4PI

        scale = abs(coeffs.ntilde)
        worst = max(worst,
                    _fd_ode_residual(s_fun, lambda r: scale, src, inner_pts, x),
                    _fd_ode_residual(s_fun, lambda r: scale, src, outer_pts, x))
        # Q0 satisfies the l=0 equation d2Q/drho2 = x^2 Q away from the shell.
        for r in (0.3, 0.7, 1.4, 2.5):
            h = 1e-4
            d2 = (K.q0_eval(r - h, x, n0h) - 2.0 * K.q0_eval(r, x, n0h)
                  + K.q0_eval(r + h, x, n0h)) / (h * h)
            worst = max(worst, abs(d2 - x * x * K.q0_eval(r, x, n0h))
                        / max(abs(d2), n0h))
        if s1 is not None:
            n1h = K.n1hat(s1.x)
            worst = max(worst, _fd_ode_residual(
                lambda r: K.q1_eval(r, s1.x, n1h), lambda r: n1h,
                lambda r: 0.0, [0.4, 0.8, 1.3, 2.0], s1.x))
    return CheckResult("ode-residuals", worst < tol, worst, tol,
                       "central-difference residuals of the radial equations")


def check_alpha_gate(grid, tol=1e-6, perturb=0.0) -> CheckResult:
    worst = 0.0
    for ga in grid:
        c = Coupling(-ga)
        s0 = ground_state(c)
        a_closed = alpha_closed_form(c, s0) * (1.0 + perturb)
        a_oracle = oracle.alpha_bvp(c, s0)
        worst = max(worst, abs(a_closed - a_oracle) / abs(a_closed))
    return CheckResult("alpha-closed-vs-oracle", worst < tol, worst, tol,
                       "closed form vs finite-difference solve + quadrature")


def check_alpha_decomposition(grid, tol=1e-6, perturb=0.0) -> CheckResult:
    worst = 0.0
    ordering_ok = True
    for ga in grid:
        c = Coupling(-ga)
        bd = compute_breakdown(c, coeff_perturbation=perturb)
        a_closed = bd.alpha_closed * (1.0 + perturb)
        worst = max(worst, abs(bd.alpha1 + bd.alpha2 - a_closed) / a_closed)
        if not bd.alpha2 > bd.alpha1 > 0.0:
            ordering_ok = False
    ok = worst < tol and ordering_ok
    detail = "alpha1 + alpha2 = alpha and alpha2 > alpha1 > 0"
    if not ordering_ok:
        detail = "region ordering violated"
    return CheckResult("alpha-decomposition", ok, worst, tol, detail)


def check_alpha_bb(tol=1e-4) -> CheckResult:
    worst = 0.0
    ratios = {}
    notes = []
    for ga in (4.0, 5.0, 8.0, 12.0):
        c = Coupling(-ga)
        s0, s1 = state_pair(c)
        closed = alpha_bound_bound(c, s0, s1)
        direct = oracle.alpha_bb_direct(c, s0, s1)
        rel = abs(closed - direct) / direct
        worst = max(worst, rel)
        if rel >= tol:
            notes.append(f"DISCREPANCY at |gamma|={ga}: closed={closed!r} "
                         f"direct={direct!r} (direct is normative)")
        a_total = alpha_closed_form(c, s0)
        if not 0.0 < direct < a_total:
            notes.append(f"alpha_b outside (0, alpha) at |gamma|={ga}")
        ratios[ga] = direct / a_total
    if not ratios[12.0] > ratios[4.0]:
        notes.append("alpha_b/alpha did not grow from |gamma|=4 to 12")
    ok = worst < tol and not notes
    return CheckResult("alpha-bb-gate", ok, worst, tol,
                       "; ".join(notes) or
                       f"single-term sum-over-states route; alpha_b/alpha "
                       f"{ratios[4.0]:.4f} -> {ratios[12.0]:.4f}")


def check_delta_e0(grid, tol=1e-10) -> CheckResult:
    worst = 0.0
    for ga in grid:
        c = Coupling(-ga)
        s0 = ground_state(c)
        coeffs = matching_coefficients(c, s0)
        a = delta_e0(c, s0, coeffs, eps=1.0, via="closed")
        b = delta_e0(c, s0, coeffs, eps=1.0, via="quadrature")
        worst = max(worst, abs(a - b) / abs(a))
        if delta_e0(c, s0, coeffs, eps=0.0) != 0.0:
            return CheckResult("delta-e0-paths", False, 1.0, tol,
                               "nonzero shift at zero field")
        r = delta_e0(c, s0, coeffs, eps=2.0) / delta_e0(c, s0, coeffs, eps=1.0)
        worst = max(worst, abs(r - 4.0) / 4.0)
    return CheckResult("delta-e0-paths", worst < tol, worst, tol,
                       "closed vs direct-integral energy shift, eps^2 scaling")


def check_bvp_convergence() -> CheckResult:
    c = Coupling(-2.0)
    s0 = ground_state(c)
    coeffs = matching_coefficients(c, s0)
    orders = oracle.convergence_orders(
        c, s0, lambda r: s_profile(r, c, s0, coeffs))
    ok = all(1.8 <= o <= 2.2 for o in orders)
    prof = oracle.solve_phi_bvp(c, s0)
    backward = oracle.residual_norm(c, s0, prof)
    ok = ok and backward < 1e-12
    return CheckResult("bvp-convergence", ok,
                       max(abs(o - 2.0) for o in orders), 0.2,
                       f"measured orders {['%.3f' % o for o in orders]}, "
                       f"solve backward error {backward:.1e}")


def check_deep_well(tol_root=1e-12) -> CheckResult:
    c = Coupling(-1000.0)
    s0, s1 = state_pair(c, tol=tol_root)
    bd = compute_breakdown(c)
    vals = [s0.x, s1.x, bd.alpha_closed, bd.alpha_quad, bd.alpha1, bd.alpha2,
            bd.alpha_b]
    coeffs = matching_coefficients(c, s0)
    for r in (0.2, 0.9, 1.0, 1.02, 1.5):
        vals.append(s_profile(r, c, s0, coeffs))
        vals.append(K.q0_eval(r, s0.x, K.n0hat(s0.x)))
        vals.append(K.q1_eval(r, s1.x, K.n1hat(s1.x)))
    vals.append(oracle.alpha_bvp(c, s0, richardson=False))
    ok = all(math.isfinite(v) for v in vals)
    return CheckResult("deep-well-robustness", ok, 0.0 if ok else math.inf, 0.0,
                       f"x0={s0.x:.1f}: roots, profiles, alphas all finite")


def check_scaling(tol=1e-12) -> CheckResult:
    c = Coupling(-2.0)
    bd = compute_breakdown(c)
    worst = 0.0
    # field independence: epsilon never enters alpha
    reports = [build_report(bd.alpha_closed, bd.alpha1, bd.alpha2, bd.alpha_b,
                            PhysicalParams(epsilon=e)) for e in (1.0, 1e3, 1e6)]
    for r in reports[1:]:
        worst = max(worst, abs(r.alpha_m3 - reports[0].alpha_m3) / reports[0].alpha_m3)
    # r0 scaling: same gamma, doubled radius -> alpha_m3 scales as r0^4
    r1 = build_report(bd.alpha_closed, bd.alpha1, bd.alpha2, bd.alpha_b,
                      PhysicalParams(r0=3.0e-10))
    r2 = build_report(bd.alpha_closed, bd.alpha1, bd.alpha2, bd.alpha_b,
                      PhysicalParams(r0=6.0e-10))
    power = math.log(r2.alpha_m3 / r1.alpha_m3) / math.log(2.0)
    worst = max(worst, abs(power - 4.0))
    return CheckResult("unit-scaling", worst < tol, worst, tol,
                       f"field independence and r0 exponent = {power:.12f}")


def run_all(grid: Sequence[float] = DEFAULT_GRID, tol_root: float = 1e-12,
            tol_quad: float = 1e-12, perturb_coeff: float = 0.0) -> List[CheckResult]:
    """Run the full suite; ``perturb_coeff`` injects a relative fault into the
    closed-form coefficient C and closed-form alpha so the cross-checks must
    trip (a sensitivity smoke test of the harness itself)."""
    grid = tuple(grid)
    return [
        check_spectrum_residuals(grid, tol_root),
        check_spectrum_thresholds(tol_root),
        check_normalizations(grid, quad_tol=tol_quad),
        check_continuity_and_jumps(grid, perturb_coeff),
        check_matching_2x2(grid, perturb=perturb_coeff),
        check_ode_residuals(grid, perturb=perturb_coeff),
        check_alpha_gate(grid, perturb=perturb_coeff),
        check_alpha_decomposition(grid, perturb=perturb_coeff),
        check_alpha_bb(),
        check_delta_e0(grid),
        check_bvp_convergence(),
        check_deep_well(tol_root),
        check_scaling(),
    ]
