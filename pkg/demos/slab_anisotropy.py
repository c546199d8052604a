"""How much does suppressing the normal conductivity change the force?

Two slabs with identical in-plane Drude response: one also conducts across
its faces (isotropic), the other is a nondispersive dielectric in that
direction (the graphene-stack caricature).  Far away the curves merge -
anisotropy is invisible in the retarded limit for conductors.  Close in,
the suppressed normal response cuts F_perp/z_omega by tens of percent,
which is the regime cold molecules live in.

Run:  python demos/slab_anisotropy.py
Writes demos/output/slab_anisotropy.png
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from cpaniso import Material, dielectric, drude_conductor
from cpaniso.shifts import F_slab

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

L = 2.0
par = drude_conductor(1.0, 0.25)
iso = Material(par, drude_conductor(1.0, 0.25))
aniso = Material(par, dielectric(1.2))

z_omega = np.geomspace(0.05, 20.0, 20)
f_iso = np.array([F_slab(iso, L, z)[1] for z in z_omega])
f_aniso = np.array([F_slab(aniso, L, z)[1] for z in z_omega])

fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4.5))
ax1.loglog(z_omega, f_iso / z_omega, "b--", label="isotropic conductor")
ax1.loglog(z_omega, f_aniso / z_omega, "r-.", label="insulating normal axis")
ax1.set_xlabel("z_omega")
ax1.set_ylabel("F_perp / z_omega")
ax1.set_title("nonretarded view")
ax1.legend(fontsize=8)

ax2.semilogx(z_omega, 100.0 * (1.0 - f_aniso / f_iso), "k-")
ax2.set_xlabel("z_omega")
ax2.set_ylabel("reduction of F_perp [%]")
ax2.set_title("anisotropy effect")

i = int(np.argmin(np.abs(z_omega - 1.0)))
print(f"at z_omega={z_omega[i]:.2f}: F_perp reduced by "
      f"{100 * (1 - f_aniso[i] / f_iso[i]):.1f}% "
      f"({f_iso[i]:.4f} -> {f_aniso[i]:.4f})")
fig.tight_layout()
fig.savefig(OUT / "slab_anisotropy.png", dpi=160)
print(f"wrote {OUT / 'slab_anisotropy.png'}")
