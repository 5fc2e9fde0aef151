"""The L^p energy balance holds to first order in the time step along a noisy path.

    python3 demos/energy_identity.py
"""

from chemrep.analysis import energy_identity_residual
from chemrep.config import SimConfig
from chemrep.noise import sample_noise_path
from chemrep.solver import run
from chemrep.spectral import SpectralField, eps_for_modes

n, T = 16, 0.5
path = sample_noise_path(0, eps_for_modes(n), 2.5e-5, int(round(T / 2.5e-5)))
zeta = SpectralField.cosine(1, n) + 0.5
for p in (2, 4):
    prev = None
    for dt in (1e-4, 5e-5, 2.5e-5):
        r = energy_identity_residual(run(zeta, SimConfig(n_modes=n, dt=dt, t_end=T, mean=0.5), path), p, 0, T)
        note = f"   ratio {prev / r:.2f}" if prev else ""
        print(f"p = {p}  dt = {dt:.1e}  residual {r:.3e}{note}")
        prev = r
