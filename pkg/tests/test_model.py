import math

import pytest

from shellpol import (Coupling, PhysicalParams, RejectNonNegativeG,
                      alpha_to_m3, build_report, compute_breakdown, reduce)
from shellpol.model import COULOMB_CONSTANT, COULOMB_CONSTANT_ROUNDED


def test_reduce_identities():
    p = PhysicalParams()
    # g = -hbar^2 r0 / (2m)  ->  gamma = -1
    g = -p.hbar ** 2 * p.r0 / (2.0 * p.mass)
    assert reduce(p, g).gamma == pytest.approx(-1.0, rel=1e-15)
    g = -p.hbar ** 2 * p.r0 / p.mass
    assert reduce(p, g).gamma == pytest.approx(-2.0, rel=1e-15)


def test_reduce_rejects_repulsive():
    p = PhysicalParams()
    with pytest.raises(RejectNonNegativeG):
        reduce(p, 1.0)
    with pytest.raises(RejectNonNegativeG):
        reduce(p, 0.0)


def test_alpha_to_m3():
    assert alpha_to_m3(0.0) == 0.0
    assert alpha_to_m3(1.0) == COULOMB_CONSTANT
    assert COULOMB_CONSTANT == pytest.approx(8.9875517873681764e9, rel=0.0)
    assert alpha_to_m3(1.0, paper_rounding=True) == COULOMB_CONSTANT_ROUNDED == 9e9


def test_params_validation():
    with pytest.raises(ValueError):
        PhysicalParams(mass=-1.0)
    with pytest.raises(ValueError):
        PhysicalParams(r0=0.0)
    with pytest.raises(ValueError):
        Coupling(0.5)
    with pytest.raises(ValueError):
        Coupling(0.0)


def test_field_independence():
    bd = compute_breakdown(Coupling(-2.0))
    reports = [build_report(bd.alpha_closed, bd.alpha1, bd.alpha2, bd.alpha_b,
                            PhysicalParams(epsilon=e)) for e in (1.0, 1e3, 1e6)]
    for r in reports[1:]:
        assert r.alpha_m3 == pytest.approx(reports[0].alpha_m3, rel=1e-12)
        assert r.alpha_dimensionless == reports[0].alpha_dimensionless


def test_pipeline_depends_on_gamma_only():
    # two different (r0, g) pairs with the same reduced coupling give the
    # same dimensionless result through the full pipeline
    pa = PhysicalParams(r0=3e-10)
    pb = PhysicalParams(r0=6e-10)
    g_a = -2.0 * pa.hbar ** 2 * pa.r0 / (2.0 * pa.mass)
    g_b = -2.0 * pb.hbar ** 2 * pb.r0 / (2.0 * pb.mass)
    ca = reduce(pa, g_a)
    cb = reduce(pb, g_b)
    assert ca.gamma == pytest.approx(cb.gamma, rel=1e-15)
    aa = compute_breakdown(ca).alpha_closed
    ab = compute_breakdown(cb).alpha_closed
    assert aa == pytest.approx(ab, rel=1e-12)


def test_r0_scaling_power_is_four():
    # same gamma, different radii: dimensionless alpha identical, volume
    # alpha scales as r0^4
    bd = compute_breakdown(Coupling(-2.0))
    r_small = build_report(bd.alpha_closed, bd.alpha1, bd.alpha2, bd.alpha_b,
                           PhysicalParams(r0=3e-10))
    r_big = build_report(bd.alpha_closed, bd.alpha1, bd.alpha2, bd.alpha_b,
                         PhysicalParams(r0=6e-10))
    assert r_big.alpha_dimensionless == r_small.alpha_dimensionless
    power = math.log(r_big.alpha_m3 / r_small.alpha_m3) / math.log(2.0)
    assert power == pytest.approx(4.0, abs=1e-12)


def test_report_invariants():
    bd = compute_breakdown(Coupling(-5.0))
    rep = build_report(bd.alpha_closed, bd.alpha1, bd.alpha2, bd.alpha_b,
                       PhysicalParams())
    assert rep.alpha1_m3 + rep.alpha2_m3 == pytest.approx(rep.alpha_m3, rel=1e-6)
    assert rep.alpha2_m3 > rep.alpha1_m3
    assert rep.alpha_b_m3 is not None and 0.0 < rep.alpha_b_m3 < rep.alpha_m3
    shallow = compute_breakdown(Coupling(-2.0))
    rep2 = build_report(shallow.alpha_closed, shallow.alpha1, shallow.alpha2,
                        shallow.alpha_b, PhysicalParams())
    assert rep2.alpha_b_m3 is None
