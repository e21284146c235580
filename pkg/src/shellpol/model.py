"""Physical parameters, the dimensionless reduction, and unit conversions.

All interior math runs in reduced units: lengths in shell radii r0, energies
in hbar^2/(2 m r0^2), charge and field set to 1.  Physical constants enter
only when a dimensionless result is scaled into SI at report time, which
keeps every computed number machine-independent and the exponent range tame.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

# CODATA 2018 electron values; configuration defaults, overridable per run.
ELECTRON_MASS_KG = 9.1093837015e-31
ELEMENTARY_CHARGE_C = 1.602176634e-19
HBAR_JS = 1.054571817e-34
DEFAULT_R0_M = 3.0e-10  # 3 Angstrom

# Exact Coulomb constant 1/(4 pi eps0) in N m^2 C^-2, and the 9e9 rounding
# conventionally used for quick unit conversion.
COULOMB_CONSTANT = 8.9875517873681764e9
COULOMB_CONSTANT_ROUNDED = 9.0e9

ANGSTROM_M = 1.0e-10


class RejectNonNegativeG(ValueError):
    """Raised for g >= 0: a repulsive or null shell binds nothing."""


@dataclass(frozen=True)
class PhysicalParams:
    """Dimensionful inputs of the problem.

    ``epsilon`` (the applied field, V/m) is reporting-only: the polarizability
    alpha = -2 dE0 / eps^2 is field-independent and is computed with the field
    set to 1 internally.
    """
    mass: float = ELECTRON_MASS_KG
    charge: float = ELEMENTARY_CHARGE_C
    hbar: float = HBAR_JS
    r0: float = DEFAULT_R0_M
    epsilon: float = 1.0

    def __post_init__(self):
        if not self.mass > 0.0:
            raise ValueError(f"mass must be positive, got {self.mass}")
        if not self.hbar > 0.0:
            raise ValueError(f"hbar must be positive, got {self.hbar}")
        if not self.r0 > 0.0:
            raise ValueError(f"r0 must be positive, got {self.r0}")
        if not self.epsilon > 0.0:
            raise ValueError(f"epsilon must be positive, got {self.epsilon}")

    def energy_scale_joules(self) -> float:
        """Reduced energy unit hbar^2 / (2 m r0^2)."""
        return self.hbar ** 2 / (2.0 * self.mass * self.r0 ** 2)

    def alpha_si_scale(self) -> float:
        """Factor turning dimensionless alpha into SI alpha (C^2 m^2 / J):
        2 m q^2 r0^4 / hbar^2."""
        return 2.0 * self.mass * self.charge ** 2 * self.r0 ** 4 / self.hbar ** 2


@dataclass(frozen=True)
class Coupling:
    """Dimensionless shell strength gamma = 2 m g / (hbar^2 r0), always < 0."""
    gamma: float

    def __post_init__(self):
        if not self.gamma < 0.0:
            raise ValueError(f"gamma must be negative, got {self.gamma}")
        if not math.isfinite(self.gamma):
            raise ValueError("gamma must be finite")

    @property
    def gamma_abs(self) -> float:
        return -self.gamma


def reduce(params: PhysicalParams, g: float) -> Coupling:
    """Reduce a dimensionful shell strength g (J m^3 scale factor of the
    delta shell) to the dimensionless coupling gamma = 2 m g / (hbar^2 r0)."""
    if g >= 0.0:
        raise RejectNonNegativeG(
            f"shell strength must be attractive (g < 0), got g = {g}")
    return Coupling(2.0 * params.mass * g / (params.hbar ** 2 * params.r0))


def alpha_to_m3(alpha_si: float, paper_rounding: bool = False) -> float:
    """Convert an SI polarizability (C^2 m^2 / J) to volume units (m^3)
    by multiplying with the Coulomb constant 1/(4 pi eps0).

    ``paper_rounding`` uses the rounded 9e9 N m^2 C^-2 instead of the exact
    constant, for figure matching.
    """
    k = COULOMB_CONSTANT_ROUNDED if paper_rounding else COULOMB_CONSTANT
    return alpha_si * k


@dataclass(frozen=True)
class PolarizabilityReport:
    """Final polarizability outputs in dimensionless and volume units.

    ``alpha_b_m3`` is None when the l=1 bound state does not exist
    (|gamma| <= 3), in which case there is no bound-to-bound channel.
    """
    alpha_dimensionless: float
    alpha_m3: float
    alpha1_m3: float
    alpha2_m3: float
    alpha_b_m3: Optional[float]

    def __post_init__(self):
        if not self.alpha_dimensionless > 0.0:
            raise ValueError("alpha must be positive for a bound ground state")


def build_report(alpha_dimensionless: float, alpha1_dimensionless: float,
                 alpha2_dimensionless: float,
                 alpha_b_dimensionless: Optional[float],
                 params: PhysicalParams,
                 paper_rounding: bool = False) -> PolarizabilityReport:
    """Scale a dimensionless breakdown into a volume-units report."""
    scale = params.alpha_si_scale()
    to_m3 = lambda a: alpha_to_m3(a * scale, paper_rounding)
    return PolarizabilityReport(
        alpha_dimensionless=alpha_dimensionless,
        alpha_m3=to_m3(alpha_dimensionless),
        alpha1_m3=to_m3(alpha1_dimensionless),
        alpha2_m3=to_m3(alpha2_dimensionless),
        alpha_b_m3=None if alpha_b_dimensionless is None
        else to_m3(alpha_b_dimensionless),
    )
