"""Link budgets of the three links towards the ground station."""

# %%
from hapsjam import config
from hapsjam.channel import LinkState
from hapsjam.linkbudget import (
    LinkSpec,
    antenna_loss_db,
    budget_report,
    fspl_db,
    link_coefficients,
    linear_to_db,
    simplified_pathloss_db,
)

# %% path loss at 2 GHz
print("FSPL 550 km:", round(fspl_db(2e9, 550e3), 3), "dB")
print("NLOS exponent 2.2 at 550 km:", round(simplified_pathloss_db(2e9, 550e3, 2.2), 3), "dB")
print("HAPS at 20 km:", round(simplified_pathloss_db(2e9, 20e3, 2.0), 3), "dB")

# %% link coefficients D = Pt Gt Gr / PL for the reference links
resolved = config.resolve({})
for name in ("tg", "rg", "hg"):
    spec = config.build_link(resolved, name)
    d_los, d_nlos = link_coefficients(spec)
    print(f"{name}: D_L = {d_los:.3e} ({float(linear_to_db(d_los)):.2f} dB), "
          f"D_N = {d_nlos:.3e}, p_L = {spec.p_los():.3f}")

# the HAPS jammer arrives about 8.8 dB above the LOS satellite signal
tg, hg = (config.build_link(resolved, n) for n in ("tg", "hg"))
gap = float(linear_to_db(link_coefficients(hg)[0] / link_coefficients(tg)[0]))
print(f"jammer advantage over TG LOS: {gap:.2f} dB")

# %% antenna pattern of a circular aperture (radius in wavelengths)
for omega in (0.0, 2.0, 5.0, 10.0, 20.0):
    print(f"eta=3, {omega:4.1f} deg off boresight: {antenna_loss_db(3.0, omega):8.3f} dB")

# %% a full budget with pattern loss and other losses
spec = LinkSpec(tx_power_db=10.0, distance_m=550e3, aperture_radius_wl=3.0, boresight_deg=5.0,
                other_loss_db=2.0)
report = budget_report(spec)
print(report, "total", round(report.total_db, 3), "dB", "linear", f"{report.pl_linear:.3e}")
