"""Static electric polarizability of a charged particle bound by an
attractive spherical delta-shell potential.

The second-order Stark shift is computed by solving the inhomogeneous radial
equation for the first-order correction directly (one boundary-value problem
instead of a sum over the full spectrum), giving closed forms for the
polarizability, its interior/exterior split, and the bound-to-bound
contribution.  An independent finite-difference + quadrature oracle
cross-validates every closed form; ``shellpol verify`` runs the suite.
"""
from .backend import BACKEND, available_backends, backend_name
from .model import (ANGSTROM_M, COULOMB_CONSTANT, COULOMB_CONSTANT_ROUNDED,
                    Coupling, PhysicalParams, PolarizabilityReport,
                    RejectNonNegativeG, alpha_to_m3, build_report, reduce)
from .spectrum import BoundState, NoBoundState, NoPState, ground_state, \
    p_state, state_pair
from .wavefunctions import (DegenerateDenominator, MatchingCoefficients,
                            RadialProfile, homogeneous_pair,
                            homogeneous_pair_prime, matching_coefficients,
                            q0, q1, s_profile, s_profile_prime, sample_q0,
                            sample_q1, sample_s, solve_matching_system)
from .polarizability import (AlphaBreakdown, alpha_bound_bound,
                             alpha_closed_form, alpha_regions,
                             compute_breakdown, delta_e0)
from .oracle import (NoSignChange, RadialGrid, SingularSystem, alpha_bb_direct,
                     alpha_bvp, alpha_from_quadrature, bisect, make_grid,
                     solve_phi_bvp)

__version__ = "0.1.0"

__all__ = [
    "AlphaBreakdown", "BoundState", "Coupling", "DegenerateDenominator",
    "MatchingCoefficients", "NoBoundState", "NoPState", "NoSignChange",
    "PhysicalParams", "PolarizabilityReport", "RadialGrid", "RadialProfile",
    "RejectNonNegativeG", "SingularSystem", "alpha_bb_direct",
    "alpha_bound_bound", "alpha_bvp", "alpha_closed_form",
    "alpha_from_quadrature", "alpha_regions", "alpha_to_m3",
    "available_backends", "backend_name", "bisect", "build_report",
    "compute_breakdown", "delta_e0", "ground_state", "homogeneous_pair",
    "homogeneous_pair_prime", "make_grid", "matching_coefficients", "p_state",
    "q0", "q1", "reduce", "s_profile", "s_profile_prime", "sample_q0",
    "sample_q1", "sample_s", "solve_matching_system", "solve_phi_bvp",
    "state_pair", "BACKEND", "COULOMB_CONSTANT", "COULOMB_CONSTANT_ROUNDED",
    "ANGSTROM_M",
]
