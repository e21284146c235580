"""Radial functions: the normalized bound profiles Q0 and Q1, the homogeneous
pair s_a/s_b, and the reduced first-order dipole profile S(rho) with its
matching coefficients.

Reduced convention used throughout: q = eps = 1, hbar^2/(2m) = 1, lengths in
units of r0, so the interior source is G1 rho sinh(x rho) with
G1 = -Ntil e^{-x} and the exterior source G2 rho e^{-x rho} with
G2 = -Ntil sinh x, where Ntil = N0hat / sqrt(4 pi).  Physical factors
reattach only in the polarizability layer.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .backend import kernels as K
from .model import Coupling
from .spectrum import BoundState


class DegenerateDenominator(ArithmeticError):
    """The shared matching denominator collapsed; parameters are pathological."""


@dataclass(frozen=True)
class RadialProfile:
    """Sampled radial function in rho = r/r0 units."""
    ell: int
    rho: np.ndarray
    values: np.ndarray
    meta: str

    @property
    def samples(self):
        """Ordered (rho, value) pairs."""
        return list(zip(self.rho.tolist(), self.values.tolist()))


@dataclass(frozen=True)
class MatchingCoefficients:
    """Matching data for the dipole profile at the shell.

    The raw coefficients C and D multiply hyperbolics of x = k0 r0 and
    overflow doubles for deep wells, so the profile evaluators work with the
    scaled pair c_scaled = C e^{x} and d_scaled = D e^{-x}, both O(1).
    The raw values are exposed as properties for reporting on moderate wells.
    """
    x0: float
    gamma: float
    ntilde: float
    c_scaled: float
    d_scaled: float

    @property
    def c(self) -> float:
        return self.c_scaled * math.exp(-self.x0)

    @property
    def d(self) -> float:
        return self.d_scaled * math.exp(self.x0)

    @property
    def g1(self) -> float:
        """Interior source amplitude -Ntil e^{-x0}."""
        return -self.ntilde * math.exp(-self.x0)

    @property
    def g2(self) -> float:
        """Exterior source amplitude -Ntil sinh x0."""
        return -self.ntilde * math.sinh(self.x0)


def q0(rho: float, state: BoundState) -> float:
    """Normalized l=0 radial function Q0(rho), int Q0^2 drho = 1."""
    return K.q0_eval(rho, state.x, K.n0hat(state.x))


def q1(rho: float, state: BoundState) -> float:
    """Normalized l=1 radial function Q1(rho), int Q1^2 drho = 1."""
    return K.q1_eval(rho, state.x, K.n1hat(state.x))


def homogeneous_pair(u: float) -> Tuple[float, float]:
    """The two homogeneous solutions of the l=1 radial operator,
    s_a(u) = cosh u - sinh u / u (regular at 0) and
    s_b(u) = sinh u - cosh u / u (decaying combination partner).

    Small arguments switch to series; the pair's Wronskian
    s_a s_b' - s_b s_a' is exactly 1 for every u.
    """
    if not u > 0.0:
        raise ValueError(f"u must be positive, got {u}")
    return K.sa_raw(u), K.sb_raw(u)


def homogeneous_pair_prime(u: float) -> Tuple[float, float]:
    """Derivatives (s_a'(u), s_b'(u)) of the homogeneous pair."""
    if not u > 0.0:
        raise ValueError(f"u must be positive, got {u}")
    return K.sa_prime_raw(u), K.sb_prime_raw(u)


def matching_coefficients(coupling: Coupling,
                          state0: BoundState) -> MatchingCoefficients:
    """Closed-form matching coefficients C and D of the dipole profile.

    Evaluated in e^{2x}-factored form so nothing overflows; the shared
    denominator bracket is 4 x^3 P with
    P = gamma (1+x)^2 + e^{2x} (x^2 (2x + gamma) - gamma), carried as
    e^{-2x} P.  Cross-validated against solve_matching_system, which solves
    the continuity + derivative-jump system directly.
    """
    x = state0.x
    gamma = coupling.gamma
    ntil = K.n0hat(x) / K.SQRT_4PI
    ps = K.p_shell(x, gamma)
    if abs(4.0 * x ** 3 * ps) < 1e-300:
        raise DegenerateDenominator(
            f"matching denominator ~ {4.0 * x**3 * ps:.3e} at gamma={gamma}")
    return MatchingCoefficients(
        x0=x, gamma=gamma, ntilde=ntil,
        c_scaled=K.c_scaled(x, gamma, ntil),
        d_scaled=K.d_scaled(x, gamma, ntil),
    )


def solve_matching_system(coupling: Coupling,
                          state0: BoundState) -> MatchingCoefficients:
    """Independent route to C and D: assemble and solve the 2x2 linear system

        S_in(1) = S_out(1)
        S_out'(1) - S_in'(1) = gamma S(1)

    numerically (in the scaled variables), without using the closed forms.
    This is the guard against transcription errors in those expressions.
    """
    x = state0.x
    gamma = coupling.gamma
    ntil = K.n0hat(x) / K.SQRT_4PI
    e2 = math.exp(-2.0 * x)
    x3 = x ** 3

    # Values at the shell, with C = c~ e^{-x} and D = d~ e^{x} substituted
    # so every entry is O(1):
    a_in = K.sa_scaled(x)                       # multiplies c~
    a_out = 1.0 + 1.0 / x                       # multiplies d~
    b_in = -ntil * K.g1_scaled(x) / (8.0 * x3)
    b_out = -ntil * (1.0 - e2) * (3.0 / x + 3.0 - 2.0 * x * x) / (16.0 * x3)
    # d/drho at the shell:
    da_in = x * K.sa_prime_scaled(x)
    da_out = -x * (1.0 + 1.0 / x + 1.0 / (x * x))
    db_in = -ntil * x * K.g1_prime_scaled(x) / (8.0 * x3)
    db_out = -ntil * x * (1.0 - e2) * (
        (-3.0 / (x * x) - 4.0 * x) - (3.0 / x + 3.0 - 2.0 * x * x)) / (16.0 * x3)

    mat = np.array([[a_in, -a_out],
                    [-da_in - gamma * a_in, da_out]])
    rhs = np.array([b_out - b_in,
                    gamma * b_in + db_in - db_out])
    try:
        cs, ds = np.linalg.solve(mat, rhs)
    except np.linalg.LinAlgError as exc:
        raise DegenerateDenominator(str(exc)) from exc
    return MatchingCoefficients(x0=x, gamma=gamma, ntilde=ntil,
                                c_scaled=float(cs), d_scaled=float(ds))


def s_profile(rho: float, coupling: Coupling, state0: BoundState,
              coeffs: MatchingCoefficients) -> float:
    """Reduced dipole profile S(rho): regular at the origin (O(rho^2)),
    continuous at the shell, decaying like rho^2 e^{-x rho} outside."""
    return K.s_eval(rho, state0.x, coupling.gamma, coeffs.ntilde,
                    coeffs.c_scaled, coeffs.d_scaled)


def s_profile_prime(rho: float, coupling: Coupling, state0: BoundState,
                    coeffs: MatchingCoefficients, branch: int = 0) -> float:
    """dS/drho; ``branch`` selects the one-sided derivative at rho = 1
    (-1 inside, +1 outside, 0 automatic by region)."""
    return K.s_prime(rho, state0.x, coupling.gamma, coeffs.ntilde,
                     coeffs.c_scaled, coeffs.d_scaled, branch)


def _sample(fn, rho_grid) -> np.ndarray:
    rho_grid = np.asarray(rho_grid, dtype=float)
    return np.fromiter((fn(r) for r in rho_grid), dtype=float,
                       count=rho_grid.size)


def sample_q0(state: BoundState, rho_grid) -> RadialProfile:
    n0h = K.n0hat(state.x)
    vals = _sample(lambda r: K.q0_eval(r, state.x, n0h), rho_grid)
    return RadialProfile(0, np.asarray(rho_grid, float), vals, "Q0")


def sample_q1(state: BoundState, rho_grid) -> RadialProfile:
    n1h = K.n1hat(state.x)
    vals = _sample(lambda r: K.q1_eval(r, state.x, n1h), rho_grid)
    return RadialProfile(1, np.asarray(rho_grid, float), vals, "Q1")


def sample_s(coupling: Coupling, state0: BoundState,
             coeffs: MatchingCoefficients, rho_grid) -> RadialProfile:
    vals = _sample(lambda r: s_profile(r, coupling, state0, coeffs), rho_grid)
    return RadialProfile(1, np.asarray(rho_grid, float), vals, "S")
