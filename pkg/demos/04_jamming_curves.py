"""Jamming probability against the SJR threshold, per environment and scenario."""

# %%
import numpy as np

from hapsjam import config
from hapsjam.analytics import Scenario, sjr_cdf_curve

resolved = config.resolve({})
grid = config.parse_grid("-20:40:5")

# %% direct link (scenario 1) and relay cooperation (scenario 2)
rows = {}
for beta in ("suburban", "urban", "dense-urban"):
    for scenario in (Scenario.DIRECT, Scenario.RELAY):
        cfg = config.build_scenario(resolved, scenario=scenario, beta=beta, thresholds_db=grid)
        rows[beta, scenario.value] = sjr_cdf_curve(cfg).p_jam

header = "gamma_dB " + " ".join(f"{b[:6]}-{s}".rjust(10) for b, s in rows)
print(header)
for i, g in enumerate(grid):
    print(f"{g:8g} " + " ".join(f"{rows[key][i]:10.4f}" for key in rows))

# %% denser environments mean fewer LOS useful links and more jamming
for s in (1, 2):
    ordered = np.all(rows["suburban", s] >= rows["urban", s]) and np.all(
        rows["urban", s] >= rows["dense-urban", s])
    print(f"scenario {s}: suburban >= urban >= dense-urban everywhere: {ordered}")

# %% the printed conditional expressions, kept behind a flag, are not probabilities
cfg = config.build_scenario(resolved, scenario=1, thresholds_db=(-20.0, -10.0, 0.0, 10.0))
print("closed form:", sjr_cdf_curve(cfg).p_jam.round(4))
print("printed    :", sjr_cdf_curve(cfg, paper_literal=True).p_jam.round(4))
