"""Two very different starts, one noise path: the solutions merge within unit time.

    python3 demos/coming_down.py
"""

from chemrep.noise import NoiseDriver
from chemrep.solver import run
from chemrep.config import SimConfig
from chemrep.spectral import SpectralField

cfg = SimConfig(n_modes=64, dt=1e-3, t_end=1.0, stride=100)
profile = SpectralField.cosine(1, 64) + SpectralField.sine(3, 64, 0.5)
small, large = profile * 10.0, profile * 1000.0

a = run(small, cfg, NoiseDriver.create(7, cfg.eps))
b = run(large, cfg, NoiseDriver.create(7, cfg.eps))
print(f"{'t':>5} {'||u(small)||':>14} {'||u(large)||':>14} {'distance':>12}")
for i, t in enumerate(a.times):
    ua, ub = a.field("u", index=i), b.field("u", index=i)
    print(f"{t:5.2f} {float(ua.l2_norm()):14.6g} {float(ub.l2_norm()):14.6g} {float((ua - ub).l2_norm()):12.3e}")
