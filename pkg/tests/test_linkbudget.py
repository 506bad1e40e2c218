import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from hapsjam.channel import LinkState
from hapsjam.linkbudget import (
    LinkBudgetReport,
    LinkSpec,
    antenna_loss_db,
    budget_report,
    composite_pathloss_linear,
    db_to_linear,
    fspl_db,
    isl_pathloss_db,
    link_coefficient,
    link_coefficients,
    linear_to_db,
    sample_shadowing_db,
    simplified_pathloss_db,
)


def reference_pathloss(f_hz, d_m, alpha):
    # 32.45 + 20 log10(f / MHz) + 10 alpha log10(d / km), spelled out
    return 32.45 + 20.0 * math.log10(f_hz / 1e6) + 10.0 * alpha * math.log10(d_m / 1e3)


def j1_series(x, terms=40):
    half = x / 2.0
    return sum((-1) ** k * half ** (2 * k + 1) / (math.factorial(k) * math.factorial(k + 1))
               for k in range(terms))


def test_fspl_examples():
    assert fspl_db(2e9, 550e3) == pytest.approx(32.45 + 66.0206 + 54.8073, abs=1e-3)
    assert fspl_db(2e9, 550e3) == pytest.approx(153.278, abs=1e-3)
    assert fspl_db(1e6, 1e3) == pytest.approx(32.45, abs=1e-12)
    assert isl_pathloss_db(2e9, 550e3) == fspl_db(2e9, 550e3)


def test_simplified_pathloss_examples():
    assert simplified_pathloss_db(2e9, 550e3, 2.0) == fspl_db(2e9, 550e3)
    assert simplified_pathloss_db(2e9, 550e3, 2.2) == pytest.approx(158.759, abs=1e-3)
    assert simplified_pathloss_db(2e9, 20e3, 2.0) == pytest.approx(124.491, abs=1e-3)


@pytest.mark.parametrize("f,d", [(0.0, 1.0), (1e9, 0.0), (-1.0, 5.0), (1e9, -5.0)])
def test_pathloss_domain(f, d):
    with pytest.raises(ValueError):
        fspl_db(f, d)
    with pytest.raises(ValueError):
        simplified_pathloss_db(f, d, 2.0)


@given(st.floats(1e6, 1e11), st.floats(1.0, 1e8), st.floats(0.5, 5.0))
def test_pathloss_matches_reference(f, d, alpha):
    assert simplified_pathloss_db(f, d, alpha) == pytest.approx(reference_pathloss(f, d, alpha),
                                                                abs=1e-9)


@given(st.floats(1e7, 1e10), st.floats(2e3, 1e7), st.floats(1.5, 4.0), st.floats(1.001, 2.0))
def test_pathloss_strictly_increasing(f, d, alpha, factor):
    base = simplified_pathloss_db(f, d, alpha)
    assert simplified_pathloss_db(f * factor, d, alpha) > base
    assert simplified_pathloss_db(f, d * factor, alpha) > base
    assert simplified_pathloss_db(f, d, alpha * factor) > base


@given(st.floats(-300.0, 300.0))
def test_db_round_trip(x_db):
    assert float(linear_to_db(db_to_linear(x_db))) == pytest.approx(x_db, abs=1e-12)


def test_antenna_loss_limits():
    assert antenna_loss_db(1.0, 0.0) == 0.0
    assert antenna_loss_db(1.0, 1e-12) == pytest.approx(0.0, abs=1e-12)


@given(st.floats(0.1, 1.5), st.floats(0.01, 90.0))
def test_antenna_loss_matches_series_and_is_nonpositive(eta, omega):
    x = 2.0 * math.pi * eta * math.sin(math.radians(omega))
    ratio = j1_series(x) / x
    value = antenna_loss_db(eta, omega)
    assert value <= 1e-12
    if abs(ratio) > 1e-6:
        assert value == pytest.approx(10.0 * math.log10(4.0 * ratio * ratio), abs=1e-7)


def test_shadowing():
    rng = np.random.default_rng(3)
    assert sample_shadowing_db(0.0, rng) == 0.0
    assert np.all(sample_shadowing_db(0.0, rng, 10) == 0.0)
    draws = sample_shadowing_db(4.0, rng, 1_000_000)
    assert draws.mean() == pytest.approx(0.0, abs=0.02)
    assert draws.std() == pytest.approx(4.0, abs=0.02)
    with pytest.raises(ValueError):
        sample_shadowing_db(-1.0, rng)


def test_composite_pathloss_examples():
    assert composite_pathloss_linear(prop=0.0) == 1.0
    assert composite_pathloss_linear(prop=10.0, shad=5.0, ant=10.0, other=5.0) == pytest.approx(1e-3)
    pl = fspl_db(2e9, 550e3)
    assert composite_pathloss_linear(LinkBudgetReport(pl)) == pytest.approx(4.70e-16, rel=2e-3)
    assert LinkBudgetReport(pl, 1.0, 2.0, 3.0).total_db == pytest.approx(pl + 6.0)
    assert LinkBudgetReport(30.0).pl_linear == pytest.approx(1e-3)


def test_link_coefficient_examples():
    plain = LinkSpec(tx_power_db=0.0, distance_m=550e3, alpha_nlos=2.2)
    assert link_coefficient(plain, LinkState.NLOS) == pytest.approx(
        10 ** (-simplified_pathloss_db(2e9, 550e3, 2.2) / 10), rel=1e-12)
    tg = LinkSpec(tx_power_db=10.0, distance_m=550e3, elevation_deg=30.0)
    assert link_coefficient(tg, LinkState.LOS) == pytest.approx(4.70e-15, rel=2e-3)
    assert link_coefficient(tg, "los") == pytest.approx(10 ** ((10.0 - 153.278) / 10), rel=1e-4)


@given(st.floats(-30.0, 30.0), st.floats(1e3, 1e7), st.floats(1.5, 3.0), st.floats(0.0, 1.5))
def test_los_coefficient_dominates(pt, d, alpha_los, extra):
    spec = LinkSpec(tx_power_db=pt, distance_m=d, alpha_los=alpha_los, alpha_nlos=alpha_los + extra)
    d_los, d_nlos = link_coefficients(spec)
    assert d_los >= d_nlos


def test_gains_shift_coefficient():
    base = LinkSpec(tx_power_db=10.0, distance_m=1e5)
    boosted = LinkSpec(tx_power_db=10.0, distance_m=1e5, tx_gain_db=3.0, rx_gain_db=7.0)
    ratio = link_coefficient(boosted, "los") / link_coefficient(base, "los")
    assert ratio == pytest.approx(10.0, rel=1e-12)


def test_linkspec_validation():
    with pytest.raises(ValueError):
        LinkSpec(tx_power_db=0.0, distance_m=0.0)
    with pytest.raises(ValueError):
        LinkSpec(tx_power_db=0.0, distance_m=1.0, elevation_deg=0.0)
    with pytest.raises(ValueError):
        LinkSpec(tx_power_db=0.0, distance_m=1.0, shadowing_sigma_db=-1.0)
    assert LinkSpec(tx_power_db=0.0, distance_m=1.0, env="suburban").env.beta == 0.57


def test_budget_report_components():
    spec = LinkSpec(tx_power_db=10.0, distance_m=550e3, aperture_radius_wl=2.0, boresight_deg=5.0,
                    other_loss_db=1.5, shadowing_sigma_db=3.0)
    report = budget_report(spec)
    assert report.pl_prop_db == pytest.approx(fspl_db(2e9, 550e3))
    assert report.pl_shad_db == 0.0
    # the pattern level is <= 0 dB, so the loss entry is >= 0
    assert report.pl_ant_db == pytest.approx(-antenna_loss_db(2.0, 5.0))
    assert report.pl_ant_db >= 0.0
    assert report.pl_other_db == 1.5
    drawn = budget_report(spec, np.random.default_rng(0))
    assert drawn.pl_shad_db != 0.0
