"""Small-scale fading and LOS-probability models.

Power gains are Gamma distributed with shape ``m`` and scale ``omega``
(mean ``m * omega``). This is the Nakagami-m power approximation of a
Rician channel; `rician_to_nakagami_m` gives the moment-matched shape.
"""

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

BETA_PRESETS = {
    "suburban": 0.57,
    "urban": 0.35,
    "dense-urban": 0.048,
}


class LinkState(str, Enum):
    LOS = "los"
    NLOS = "nlos"


@dataclass(frozen=True)
class FadingSpec:
    """Gamma power-gain parameters for the LOS and NLOS states of a link."""

    m_los: float = 3.0
    omega_los: float = 1.0 / 3.0
    m_nlos: float = 2.0
    omega_nlos: float = 0.5

    def __post_init__(self):
        for name in ("m_los", "omega_los", "m_nlos", "omega_nlos"):
            value = getattr(self, name)
            if not (value > 0 and math.isfinite(value)):
                raise ValueError(f"FadingSpec.{name} must be positive and finite, got {value!r}")

    def shape_scale(self, state):
        if LinkState(state) is LinkState.LOS:
            return self.m_los, self.omega_los
        return self.m_nlos, self.omega_nlos

    def mean_power(self, state):
        m, omega = self.shape_scale(state)
        return m * omega


@dataclass(frozen=True)
class RicianSpec:
    k_factor: float

    def __post_init__(self):
        if not self.k_factor >= 0:
            raise ValueError(f"Rician K factor must be >= 0, got {self.k_factor!r}")

    @property
    def los_weight(self):
        """Power of the specular component, K / (K + 1)."""
        return self.k_factor / (self.k_factor + 1.0)

    @property
    def nlos_weight(self):
        """Power of the scattered component, 1 / (K + 1)."""
        return 1.0 / (self.k_factor + 1.0)

    def nakagami_m(self, exact_moments=False):
        return rician_to_nakagami_m(self.k_factor, exact_moments)

    def gamma_approximation(self, exact_moments=False):
        """(shape, scale) of the unit-mean Gamma approximation."""
        m = self.nakagami_m(exact_moments)
        return m, 1.0 / m


@dataclass(frozen=True)
class Environment:
    beta: float

    def __post_init__(self):
        if not (self.beta >= 0 and math.isfinite(self.beta)):
            raise ValueError(f"environment beta must be >= 0, got {self.beta!r}")

    @classmethod
    def parse(cls, value):
        """Build from a preset name ('urban', ...) or a number."""
        if isinstance(value, Environment):
            return value
        if isinstance(value, str):
            key = value.strip().lower().replace("_", "-")
            if key in BETA_PRESETS:
                return cls(BETA_PRESETS[key])
            try:
                return cls(float(key))
            except ValueError:
                raise ValueError(
                    f"unknown environment {value!r}; use a number or one of "
                    f"{', '.join(BETA_PRESETS)}"
                ) from None
        return cls(float(value))


def rician_to_nakagami_m(k_factor, exact_moments=False):
    """Nakagami shape approximating a Rician channel.

    The default is the published rule (K^2 + K + 1) / (2K + 1), which tends
    to K/2. It does not reproduce the Rician second moment; with
    ``exact_moments=True`` the shape (K + 1)^2 / (2K + 1) is returned, which
    matches the first two moments of the power exactly.
    """
    k = float(k_factor)
    if not k >= 0:
        raise ValueError(f"Rician K factor must be >= 0, got {k_factor!r}")
    if math.isinf(k):
        return math.inf
    if exact_moments:
        # (K + 1)^2 / (2K + 1), written so it never rounds below 1
        return 1.0 + k * k / (2.0 * k + 1.0)
    return (k * k + k + 1.0) / (2.0 * k + 1.0)


def _check_elevation(elevation_deg):
    theta = float(elevation_deg)
    if not 0.0 < theta <= 90.0:
        raise ValueError(f"elevation must lie in (0, 90] degrees, got {elevation_deg!r}")
    return theta


def los_probability(elevation_deg, env):
    """exp(-beta * cot(theta)) for elevation in degrees.

    ``env`` may be an `Environment`, a preset name or a bare beta value.
    """
    theta = _check_elevation(elevation_deg)
    beta = Environment.parse(env).beta
    if theta == 90.0:
        return 1.0
    return math.exp(-beta / math.tan(math.radians(theta)))


def nlos_probability(elevation_deg, env):
    return 1.0 - los_probability(elevation_deg, env)


def elevation_from_geometry(horizontal_distance, obstacle_height):
    """Elevation in degrees with cot(theta) = horizontal_distance / obstacle_height."""
    r, l = float(horizontal_distance), float(obstacle_height)
    if not (r > 0 and l > 0):
        raise ValueError("horizontal distance and obstacle height must be positive")
    return math.degrees(math.atan2(l, r))


def sample_power_gain(m, omega, rng, size=None):
    """Gamma(shape=m, scale=omega) power-gain draws."""
    return rng.gamma(m, omega, size)


def sample_rician_power(spec, rng, size=None):
    """|sqrt(lambda) e^{j phi} + sqrt(lambda') h'|^2 with h' ~ CN(0, 1).

    The LOS phase is uniform on [-pi, pi]; it does not change the power
    distribution but is drawn so the sample path is the literal model.
    """
    if not isinstance(spec, RicianSpec):
        spec = RicianSpec(float(spec))
    phase = rng.uniform(-np.pi, np.pi, size)
    scatter = (rng.standard_normal(size) + 1j * rng.standard_normal(size)) / np.sqrt(2.0)
    h = np.sqrt(spec.los_weight) * np.exp(1j * phase) + np.sqrt(spec.nlos_weight) * scatter
    return np.abs(h) ** 2
