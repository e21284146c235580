import pytest

from shellpol import Coupling, ground_state, state_pair, matching_coefficients


@pytest.fixture
def pipeline():
    """Build (coupling, state0, state1, coeffs) for a |gamma| value."""
    def make(gamma_abs):
        c = Coupling(-gamma_abs)
        s0, s1 = state_pair(c)
        return c, s0, s1, matching_coefficients(c, s0)
    return make
