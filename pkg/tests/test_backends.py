"""Parity between the compiled kernel core and the pure-Python fallback."""
import math

import pytest

from shellpol.backend import available_backends

BACKENDS = available_backends()
needs_both = pytest.mark.skipif(
    "cython" not in BACKENDS, reason="compiled kernels not built")

SCALAR_FUNCS = [
    "fn0", "fn1", "n0hat", "n1hat", "sa_raw", "sb_raw", "sa_prime_raw",
    "sb_prime_raw", "sa_scaled", "sa_prime_scaled", "g1_scaled",
    "g1_prime_scaled", "u_factor",
]
ARGS = [1e-6, 1e-3, 0.1, 0.4999, 0.5, 0.7, 1.0, 2.5, 10.0, 40.0, 200.0, 500.0]

GAMMAS_X = [(-1.2, 0.18821899862473064), (-2.0, 0.79681213002002005),
            (-5.0, 2.48255711587213815), (-12.0, 5.99996313200748251),
            (-1000.0, 500.0)]


def _close(a, b):
    if a == b:
        return True
    if math.isnan(a) and math.isnan(b):
        return True
    return abs(a - b) <= 5e-15 * max(abs(a), abs(b))


@needs_both
@pytest.mark.parametrize("fname", SCALAR_FUNCS)
def test_scalar_parity(fname):
    py = BACKENDS["python"]
    cy = BACKENDS["cython"]
    for u in ARGS:
        a = getattr(py, fname)(u)
        b = getattr(cy, fname)(u)
        assert _close(a, b), f"{fname}({u}): {a} vs {b}"


@needs_both
def test_coefficient_and_alpha_parity():
    py = BACKENDS["python"]
    cy = BACKENDS["cython"]
    for gam, x in GAMMAS_X:
        ntil = py.n0hat(x) / py.SQRT_4PI
        for fn in ("p_shell", "alpha_closed"):
            assert _close(getattr(py, fn)(x, gam), getattr(cy, fn)(x, gam))
        for fn in ("c_scaled", "d_scaled"):
            assert _close(getattr(py, fn)(x, gam, ntil),
                          getattr(cy, fn)(x, gam, ntil))
        for t in (x / 2, x, 1.5 * x):
            assert _close(py.resid_l0(t, -gam), cy.resid_l0(t, -gam))
            assert _close(py.resid_l1(t, -gam), cy.resid_l1(t, -gam))


@needs_both
def test_profile_parity():
    py = BACKENDS["python"]
    cy = BACKENDS["cython"]
    for gam, x in GAMMAS_X:
        n0h = py.n0hat(x)
        ntil = n0h / py.SQRT_4PI
        cs = py.c_scaled(x, gam, ntil)
        ds = py.d_scaled(x, gam, ntil)
        for rho in (1e-4, 0.3, 0.99, 1.0, 1.001, 1.7, 1.0 + 10.0 / x):
            for branch in (-1, 0, +1):
                if branch < 0 and rho > 1.0:
                    continue
                if branch > 0 and rho < 1.0:
                    continue
                assert _close(py.q0_eval(rho, x, n0h, branch),
                              cy.q0_eval(rho, x, n0h, branch))
                assert _close(py.q0_prime(rho, x, n0h, branch),
                              cy.q0_prime(rho, x, n0h, branch))
                assert _close(py.s_eval(rho, x, gam, ntil, cs, ds, branch),
                              cy.s_eval(rho, x, gam, ntil, cs, ds, branch))
                assert _close(py.s_prime(rho, x, gam, ntil, cs, ds, branch),
                              cy.s_prime(rho, x, gam, ntil, cs, ds, branch))
                n1h = py.n1hat(x)
                assert _close(py.q1_eval(rho, x, n1h, branch),
                              cy.q1_eval(rho, x, n1h, branch))
                assert _close(py.q1_prime(rho, x, n1h, branch),
                              cy.q1_prime(rho, x, n1h, branch))


@needs_both
def test_alpha_b_parity():
    py = BACKENDS["python"]
    cy = BACKENDS["cython"]
    pairs = [(1.96034519743644317, 1.25483303783537561),
             (5.99996313200748251, 5.82312691348672118),
             (500.0, 499.0)]
    for x0, x1 in pairs:
        assert _close(py.alpha_b_closed(x0, x1), cy.alpha_b_closed(x0, x1))


@needs_both
def test_integrate_parity():
    py = BACKENDS["python"]
    cy = BACKENDS["cython"]
    x = 0.79681213002002005
    gam = -2.0
    n0h = py.n0hat(x)
    ntil = n0h / py.SQRT_4PI
    cs = py.c_scaled(x, gam, ntil)
    ds = py.d_scaled(x, gam, ntil)
    for kind, args in [
        (0, (x, gam, ntil, cs, ds, n0h)),
        (1, (x, n0h)),
        (3, (x, n0h, 1.25483303783537561, py.n1hat(1.25483303783537561))),
    ]:
        for a, b in [(0.0, 1.0), (1.0, 1.0 + 40.0 / x)]:
            va = py.integrate(kind, a, b, 1e-11, *args)
            vb = cy.integrate(kind, a, b, 1e-11, *args)
            assert _close(va, vb), f"kind={kind} [{a},{b}]: {va} vs {vb}"


@needs_both
def test_forced_backend_env(tmp_path, monkeypatch):
    # the selector honors SHELLPOL_BACKEND in a fresh interpreter
    import subprocess
    import sys
    code = "import shellpol; print(shellpol.backend_name())"
    for req, expect in (("py", "python"), ("cy", "cython"), ("auto", "cython")):
        out = subprocess.run(
            [sys.executable, "-c", code],
            env={"SHELLPOL_BACKEND": req, "PATH": "/usr/bin:/bin"},
            capture_output=True, text=True, check=True)
        assert out.stdout.strip() == expect
