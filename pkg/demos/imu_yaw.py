# %% [markdown]
# # Calibrating the IMU heading against vision
#
# The IMU measures yaw in its own frame. One paired reading against the
# vision yaw gives a constant offset; after that, headings move between the
# frames by adding or subtracting it, wrapped to (-pi, pi].

# %%
import math

import numpy as np

from sslmotion import to_imu_frame, to_ssl_frame, yaw_offset

imu_at_boot, ssl_at_boot = 2.9, -2.8
offset = yaw_offset(imu_at_boot, ssl_at_boot)
print(f"offset = {offset.delta_theta:+.4f} rad")

# %%
for target in (0.0, math.pi / 2, math.pi, -3.0):
    cmd = to_imu_frame(target, offset)
    print(f"vision {target:+.4f} -> imu {cmd:+.4f} -> vision {to_ssl_frame(cmd, offset):+.4f}")

# %% [markdown]
# Round trips stay exact up to rounding, even across the wrap point.

# %%
angles = np.random.default_rng(0).uniform(-10, 10, 10_000)
worst = max(abs(math.remainder(to_ssl_frame(to_imu_frame(a, offset), offset) - a, 2 * math.pi)) for a in angles)
print(f"worst round-trip error {worst:.2e} rad")
