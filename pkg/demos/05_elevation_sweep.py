"""How the transmitter elevation changes the benefit of the relay path."""

# %%
from hapsjam import config
from hapsjam.cli import elevation_sweep

resolved = config.resolve({})
angles = config.parse_grid("5:90:5")

# %% at a 10 dB threshold both links are almost surely jammed, so the
# relay gain is tiny: the jammer is ~8.8 dB stronger than either satellite
rows = elevation_sweep(resolved, angles, 10.0, (30.0, 60.0, 90.0))
print("theta_tg  P_sc1      P_sc2(rg30) P_sc2(rg60) P_sc2(rg90)")
for row in rows[::3]:
    print(f"{row[0]:8g}  " + "  ".join(f"{v:.6f}" for v in row[1:]))

# %% near -20 dB the relay helps a lot at low elevation and hardly at all
# overhead, where the direct link is already in LOS
rows = elevation_sweep(resolved, angles, -20.0, (30.0, 60.0, 90.0))
print("\ngamma = -20 dB")
for row in rows[::3] + rows[-1:]:
    gap = row[1] - row[3]
    print(f"theta_tg {row[0]:4g}: P_sc1 {row[1]:.4f}  P_sc2(rg60) {row[3]:.4f}  gap {gap:.4f}")
