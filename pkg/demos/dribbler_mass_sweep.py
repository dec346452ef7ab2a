# %% [markdown]
# # Does a heavier dribbler bar soak up a pass?
#
# The bar (mass M) rides on a stiff spring and damper. The incoming ball (m)
# hits it at 2 m/s and can bounce off again. We sweep M and look at how far
# the bar moves, how long it rings and how often the ball separates.

# %%
import sys

from sslmotion import DribblerParams, mass_sweep, simulate
from sslmotion.dribbler import MASS_SWEEP

base = DribblerParams()
rows = mass_sweep(base, MASS_SWEEP)
print("   M [kg]   peak [mm]   settle [s]   separations")
for M, peak, settle, seps in rows:
    print(f"   {M:6.2f}   {peak * 1e3:9.3f}   {settle:10.4f}   {seps:11d}")

# %% [markdown]
# Heavier bars move further and take longer to settle, so the soft-catch
# behaviour favours a light bar.

# %%
try:
    import matplotlib.pyplot as plt
except ImportError:
    sys.exit("matplotlib not installed; skipping the figure")

fig, ax = plt.subplots(figsize=(7, 4), constrained_layout=True)
for M in MASS_SWEEP:
    tr = simulate(base.with_mass(M))
    ax.plot(tr.times, tr.x1 * 1e3, label=f"M = {M} kg")
ax.set_xlabel("t [s]")
ax.set_ylabel("ball displacement x1 [mm]")
ax.legend()
fig.savefig("dribbler_mass_sweep.png", dpi=120)
print("wrote dribbler_mass_sweep.png")
