"""Bound-state spectrum of the attractive delta shell.

The l=0 ground state exists for |gamma| > 1 and solves
    2 x / |gamma| = 1 - e^{-2x},          x = k0 r0,
the l=1 excited state exists for |gamma| > 3 and solves
    x / |gamma| = (1 + 1/x)(cosh x - sinh x / x) e^{-x},   x = k1 r0.

Both right-hand sides are evaluated in overflow-safe scaled form; both
equations are solved by bracketed bisection (monotone residuals on the
bracket, so the iteration cannot escape it).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Tuple

from ._rootfind import bisect, NoSignChange
from .backend import kernels as K
from .model import Coupling, PhysicalParams


class NoBoundState(ValueError):
    """|gamma| <= 1: the shell binds no state at all."""


class NoPState(ValueError):
    """|gamma| <= 3: no l=1 bound state, hence no bound-to-bound channel."""


@dataclass(frozen=True)
class BoundState:
    """A bound level, stored as the dimensionless wavenumber x = k r0."""
    ell: int
    x: float
    residual: float

    def __post_init__(self):
        if self.ell not in (0, 1):
            raise ValueError(f"only l=0 and l=1 states exist here, got {self.ell}")
        if not self.x > 0.0:
            raise ValueError(f"wavenumber must be positive, got {self.x}")

    def energy_joules(self, params: PhysicalParams) -> float:
        """E = -hbar^2 x^2 / (2 m r0^2)."""
        return -self.x ** 2 * params.energy_scale_joules()


# Bisection refines the bracket to this absolute width; residuals come out
# far below the 1e-12 acceptance bar everywhere on the physical range.
_X_WIDTH = 1e-13


def _solve(resid, lo: float, hi: float, tol: float, label: str) -> Tuple[float, float]:
    try:
        res = bisect(resid, lo, hi, tol=_X_WIDTH)
    except NoSignChange:
        # One widening attempt, then fail loudly: a missing sign change on
        # the widened bracket means the threshold logic is wrong.
        res = bisect(resid, lo * 1e-3, hi * 2.0, tol=_X_WIDTH)
    if abs(res.f_root) >= tol:
        raise ArithmeticError(
            f"{label} root residual {res.f_root:.3e} did not reach tol={tol}")
    return res.root, res.f_root


def ground_state(coupling: Coupling, tol: float = 1e-12) -> BoundState:
    """Solve the l=0 transcendental equation for x0 = k0 r0.

    The root satisfies x0 < |gamma|/2, so [1e-9, |gamma|] brackets it.
    Raises NoBoundState for |gamma| <= 1 (strict-inequality threshold).
    """
    ga = coupling.gamma_abs
    if ga <= 1.0:
        raise NoBoundState(
            f"|gamma| = {ga} <= 1: no l=0 bound state, no polarizability")
    x, f = _solve(lambda t: K.resid_l0(t, ga), 1e-9, ga, tol, "l=0")
    return BoundState(ell=0, x=x, residual=f)


def p_state(coupling: Coupling, tol: float = 1e-12) -> BoundState:
    """Solve the l=1 transcendental equation for x1 = k1 r0.

    The right side is bounded above by 1/2, so [1e-6, |gamma|] brackets the
    root.  Raises NoPState for |gamma| <= 3 (the small-x expansion of the
    right side is x/3 - 2x^3/15, so the threshold is exactly 3).
    """
    ga = coupling.gamma_abs
    if ga <= 3.0:
        raise NoPState(f"|gamma| = {ga} <= 3: no l=1 bound state")
    x, f = _solve(lambda t: K.resid_l1(t, ga), 1e-6, ga, tol, "l=1")
    return BoundState(ell=1, x=x, residual=f)


def state_pair(coupling: Coupling,
               tol: float = 1e-12) -> Tuple[BoundState, Optional[BoundState]]:
    """Ground state plus the l=1 state when it exists (None otherwise)."""
    s0 = ground_state(coupling, tol)
    try:
        s1 = p_state(coupling, tol)
    except NoPState:
        return s0, None
    if not s1.x < s0.x:
        raise ArithmeticError(
            f"l=1 root {s1.x} not below l=0 root {s0.x} at gamma={coupling.gamma}")
    return s0, s1
