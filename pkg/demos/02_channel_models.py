"""Fading and LOS models: Gamma power gains, Rician matching, LOS probability."""

# %%
import numpy as np

from hapsjam.channel import (
    BETA_PRESETS,
    FadingSpec,
    RicianSpec,
    elevation_from_geometry,
    los_probability,
    rician_to_nakagami_m,
    sample_power_gain,
    sample_rician_power,
)

rng = np.random.default_rng(1)

# %% default LOS/NLOS fading has unit mean power in both states
fading = FadingSpec()
for state in ("los", "nlos"):
    m, omega = fading.shape_scale(state)
    h = sample_power_gain(m, omega, rng, 1_000_000)
    print(f"{state}: m={m:g} omega={omega:.3f} mean={h.mean():.4f} var={h.var():.4f} (m omega^2={m * omega**2:.4f})")

# %% Rician power vs the Gamma approximation
# the published shape rule and the exact two-moment shape differ for small K
print(" K   m(pub)   m(exact)  E[P^2] rician  1+1/m(pub)  1+1/m(exact)")
for k in (0.5, 1.0, 5.0, 10.0, 100.0):
    p = sample_rician_power(RicianSpec(k), rng, 1_000_000)
    m_pub, m_exact = rician_to_nakagami_m(k), rician_to_nakagami_m(k, exact_moments=True)
    print(f"{k:5g}  {m_pub:7.3f}  {m_exact:8.3f}  {np.mean(p**2):12.4f}  {1 + 1 / m_pub:10.4f}"
          f"  {1 + 1 / m_exact:12.4f}")

# %% LOS probability vs elevation for the three environments
angles = [5, 15, 30, 45, 60, 90]
print("theta  " + "  ".join(f"{name:>11}" for name in BETA_PRESETS))
for theta in angles:
    print(f"{theta:5d}  " + "  ".join(f"{los_probability(theta, name):11.4f}" for name in BETA_PRESETS))

# %% elevation from a street-canyon geometry: 1 km away behind a 100 m building
print("elevation:", round(elevation_from_geometry(1000.0, 100.0), 4), "deg")
