"""Steer the deterministic flow from a cosine to a chosen profile with the same mean.

    python3 demos/steering.py
"""

import numpy as np

from chemrep.config import SimConfig
from chemrep.solver import MeanMismatch, run, steering_control
from chemrep.spectral import SpectralField

n, T = 32, 0.1
cfg = SimConfig(n_modes=n, dt=1e-4, t_end=T, mean=1.0, noise=False)
start = SpectralField.constant(1.0, n) + SpectralField.cosine(1, n)
target = SpectralField.constant(1.0, n) + SpectralField.cosine(2, n, 0.5) + SpectralField.sine(5, n, 0.25)

traj = run(start, cfg, steering_control(start, target, T, cfg), duration=T)
for i in range(0, len(traj.times), 100):
    t, u = traj.times[i], traj.field("u", index=i)
    print(f"t = {t:.3f}   distance to target {float((u - target).l2_norm()):.3e}")
print(f"final miss {float((traj.final() - target).l2_norm()):.3e}")

try:
    steering_control(start, target + 0.5, T, cfg)
except MeanMismatch as exc:
    print(f"rejected as expected: {exc}")
print(f"max |u| on the way: {np.abs(SpectralField(traj.u).grid()).max():.3f}")
