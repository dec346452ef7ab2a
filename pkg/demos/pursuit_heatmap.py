# %% [markdown]
# # Where is it cheap to chase a rolling ball?
#
# A robot at rest somewhere on the field wants to meet a ball rolling along +y
# from the origin. For every grid cell we ask how long the pursuit takes.
# Robots behind the ball can fall in line with it, robots ahead have to turn
# around, and the heatmap makes that asymmetry visible.

# %%
import sys
import time

import numpy as np

from sslmotion import BallState, PursuitConfig, Vec2, pursuit_heatmap

cfg = PursuitConfig()
speeds = (0.5, 1.5)

# %%
grids = {}
for speed in speeds:
    start = time.perf_counter()
    ball = BallState(Vec2(0.0, 0.0), Vec2(0.0, speed))
    grids[speed] = pursuit_heatmap(ball, Vec2(-6.0, -6.0), 0.2, 61, 61, cfg)
    print(f"{speed} m/s: 61x61 grid in {time.perf_counter() - start:.2f} s")

# %% [markdown]
# Split each grid into the half behind the ball (y < 0) and the half ahead.

# %%
for speed, grid in grids.items():
    _, ys = grid.cell_centers()
    behind, ahead = grid.values[ys < 0].mean(), grid.values[ys > 0].mean()
    print(f"{speed} m/s  behind {behind:.3f} s  ahead {ahead:.3f} s  gap {ahead - behind:+.3f} s")

# %%
try:
    import matplotlib.pyplot as plt
except ImportError:
    sys.exit("matplotlib not installed; skipping the figure")

fig, axes = plt.subplots(1, 2, figsize=(10, 4.5), constrained_layout=True)
for ax, (speed, grid) in zip(axes, grids.items()):
    vals = np.where(np.isfinite(grid.values), grid.values, np.nan)
    im = ax.imshow(vals, origin="lower", extent=(-6.1, 6.1, -6.1, 6.1), cmap="viridis")
    ax.arrow(0, 0, 0, 1.0, color="w", width=0.05)
    ax.set_title(f"ball speed {speed} m/s")
    ax.set_xlabel("x [m]")
    ax.set_ylabel("y [m]")
    fig.colorbar(im, ax=ax, label="pursuit time [s]")
fig.savefig("pursuit_heatmap.png", dpi=120)
print("wrote pursuit_heatmap.png")
