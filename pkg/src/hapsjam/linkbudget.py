"""Deterministic power arithmetic: path losses and link coefficients.

Public functions take SI units (Hz, m). The 32.45 dB constant assumes MHz
and km, so the conversion happens inside each formula. Transmit powers
are dB relative to an arbitrary reference; only the useful/jammer ratio
matters downstream, so the reference cancels.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .channel import Environment, LinkState, los_probability
from .specfun import bessel_j1

FSPL_CONSTANT_DB = 32.45


def db_to_linear(x_db):
    return np.power(10.0, np.divide(x_db, 10.0))


def linear_to_db(x):
    return 10.0 * np.log10(x)


def _positive(name, value):
    value = float(value)
    if not (value > 0 and math.isfinite(value)):
        raise ValueError(f"{name} must be positive and finite, got {value!r}")
    return value


def simplified_pathloss_db(frequency_hz, distance_m, alpha):
    """32.45 + 20 log10(f_MHz) + 10 alpha log10(d_km)."""
    f = _positive("frequency", frequency_hz)
    d = _positive("distance", distance_m)
    a = _positive("path-loss exponent", alpha)
    return FSPL_CONSTANT_DB + 20.0 * math.log10(f / 1e6) + 10.0 * a * math.log10(d / 1e3)


def fspl_db(frequency_hz, distance_m):
    """Free-space path loss in dB."""
    return simplified_pathloss_db(frequency_hz, distance_m, 2.0)


# the inter-satellite link uses the free-space form as well
isl_pathloss_db = fspl_db


def antenna_loss_db(aperture_radius_wavelengths, boresight_deg):
    """Circular-aperture pattern 10 log10(4 |J1(x)/x|^2), x = 2 pi eta sin(omega).

    The result is <= 0 dB: it is the pattern level relative to boresight.
    """
    eta = _positive("aperture radius", aperture_radius_wavelengths)
    omega = float(boresight_deg)
    if not 0.0 <= omega <= 90.0:
        raise ValueError(f"boresight angle must lie in [0, 90] degrees, got {boresight_deg!r}")
    x = 2.0 * math.pi * eta * math.sin(math.radians(omega))
    if abs(x) < 1e-8:
        return 0.0  # J1(x)/x -> 1/2
    ratio = bessel_j1(x) / x
    if ratio == 0.0:
        return -math.inf
    return 10.0 * math.log10(4.0 * ratio * ratio)


def sample_shadowing_db(sigma_db, rng, size=None):
    """Zero-mean log-normal shadowing, in dB."""
    sigma = float(sigma_db)
    if not sigma >= 0:
        raise ValueError(f"shadowing sigma must be >= 0, got {sigma_db!r}")
    if sigma == 0.0:
        return 0.0 if size is None else np.zeros(size)
    return rng.normal(0.0, sigma, size)


@dataclass
class LinkBudgetReport:
    """dB loss components of one link; positive numbers attenuate."""

    pl_prop_db: float
    pl_shad_db: float = 0.0
    pl_ant_db: float = 0.0
    pl_other_db: float = 0.0

    @property
    def total_db(self):
        return self.pl_prop_db + self.pl_shad_db + self.pl_ant_db + self.pl_other_db

    @property
    def pl_linear(self):
        return composite_pathloss_linear(self)


def composite_pathloss_linear(report=None, *, prop=0.0, shad=0.0, ant=0.0, other=0.0):
    """10^(-(prop + shad + ant + other) / 10) from a report or loose components."""
    if report is not None:
        total = report.total_db
    else:
        total = prop + shad + ant + other
    if not math.isfinite(total):
        raise ValueError("loss components must be finite")
    return 10.0 ** (-total / 10.0)


@dataclass(frozen=True)
class LinkSpec:
    """One radio link towards the ground station.

    Antenna pattern loss is applied only when ``aperture_radius_wl`` and
    ``boresight_deg`` are both set, and together with shadowing and
    ``other_loss_db`` only feeds the full link budget, not the closed forms.
    """

    tx_power_db: float
    distance_m: float
    elevation_deg: float = 90.0
    frequency_hz: float = 2e9
    tx_gain_db: float = 0.0
    rx_gain_db: float = 0.0
    env: Environment = field(default_factory=lambda: Environment(0.35))
    alpha_los: float = 2.0
    alpha_nlos: float = 2.2
    forced_los: bool = False
    shadowing_sigma_db: float = 0.0
    aperture_radius_wl: float = None
    boresight_deg: float = None
    other_loss_db: float = 0.0

    def __post_init__(self):
        if not isinstance(self.env, Environment):
            object.__setattr__(self, "env", Environment.parse(self.env))
        _positive("frequency", self.frequency_hz)
        _positive("distance", self.distance_m)
        _positive("alpha_los", self.alpha_los)
        _positive("alpha_nlos", self.alpha_nlos)
        if not 0.0 < self.elevation_deg <= 90.0:
            raise ValueError(f"elevation must lie in (0, 90] degrees, got {self.elevation_deg!r}")
        if self.shadowing_sigma_db < 0:
            raise ValueError("shadowing sigma must be >= 0")
        for name in ("tx_power_db", "tx_gain_db", "rx_gain_db", "other_loss_db"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")

    def p_los(self):
        if self.forced_los:
            return 1.0
        return los_probability(self.elevation_deg, self.env)

    def alpha(self, state):
        return self.alpha_los if LinkState(state) is LinkState.LOS else self.alpha_nlos

    def eirp_db(self):
        return self.tx_power_db + self.tx_gain_db + self.rx_gain_db

    def antenna_attenuation_db(self):
        if self.aperture_radius_wl is None or self.boresight_deg is None:
            return 0.0
        return -antenna_loss_db(self.aperture_radius_wl, self.boresight_deg)


def link_coefficient(spec, state):
    """Pt Gt Gr PL (all linear) for the given LOS/NLOS state."""
    pl = simplified_pathloss_db(spec.frequency_hz, spec.distance_m, spec.alpha(state))
    return 10.0 ** ((spec.eirp_db() - pl) / 10.0)


def link_coefficients(spec):
    """(D_los, D_nlos) pair."""
    return link_coefficient(spec, LinkState.LOS), link_coefficient(spec, LinkState.NLOS)


def budget_report(spec, rng=None):
    """Full large-scale budget of a link. Shadowing is drawn only if ``rng`` is given."""
    shad = 0.0
    if rng is not None and spec.shadowing_sigma_db > 0:
        shad = float(sample_shadowing_db(spec.shadowing_sigma_db, rng))
    return LinkBudgetReport(
        pl_prop_db=fspl_db(spec.frequency_hz, spec.distance_m),
        pl_shad_db=shad,
        pl_ant_db=spec.antenna_attenuation_db(),
        pl_other_db=spec.other_loss_db,
    )
