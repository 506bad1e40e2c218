"""Brute-force check of the closed forms and of the run reproducibility."""

# %%
import time

from hapsjam import config
from hapsjam.analytics import sjr_cdf_curve
from hapsjam.montecarlo import McConfig, compare, run_cdf

resolved = config.resolve({})

# %% analytic curves vs one million simulated SJR samples
for scenario in (1, 2):
    cfg = config.build_scenario(resolved, scenario=scenario)
    start = time.perf_counter()
    report = compare(sjr_cdf_curve(cfg), run_cdf(cfg, McConfig(samples=1_000_000, seed=0)))
    print(f"scenario {scenario}: max |analytic - MC| = {report.max_abs_dev:.2e} "
          f"at {report.argmax_db:g} dB ({time.perf_counter() - start:.2f} s)")

# %% error falls roughly as 1 / sqrt(n)
cfg = config.build_scenario(resolved, scenario=1)
analytic = sjr_cdf_curve(cfg)
for n in (10_000, 100_000, 1_000_000):
    print(n, f"{compare(analytic, run_cdf(cfg, McConfig(samples=n, seed=1))).max_abs_dev:.2e}")

# %% results depend on the seed only, not on the number of workers
cfg = config.build_scenario(resolved, scenario=2)
a = run_cdf(cfg, McConfig(samples=500_000, seed=3, workers=1)).cdf
b = run_cdf(cfg, McConfig(samples=500_000, seed=3, workers=4)).cdf
print("identical across worker counts:", a.tobytes() == b.tobytes())

# %% shared vs independent jammer draws for the two links
for mode in ("independent", "shared"):
    mc = McConfig(samples=1_000_000, seed=0, jammer_draw=mode)
    dev = compare(sjr_cdf_curve(cfg), run_cdf(cfg, mc)).max_abs_dev
    print(f"{mode:11s} jammer draw: max dev from product form {dev:.2e}")
