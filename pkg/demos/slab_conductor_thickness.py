"""Why a conducting slab is not a conducting half-space.

A half-space of any conductor reflects perfectly at zero frequency, so the
retarded shift coefficient reaches the mirror value 1/2 regardless of
losses.  A slab does not: with damping, the far-distance plateau of F_par
depends on the single dimensionless product L*sigma(0) (thickness times DC
conductivity).  The lossless slab still reaches 1/2; the lossy one
saturates lower, exactly where the closed-form thickness expansion says.

Run:  python demos/slab_conductor_thickness.py
Writes demos/output/slab_conductor_thickness.png
"""

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from cpaniso import Material, drude_conductor, lossless_plasma, vacuum
from cpaniso.asymptotics import ret_F_slab_conductor
from cpaniso.shifts import F_slab

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

L = 1.0
z_omega = np.geomspace(0.3, 60.0, 22)
fig, ax = plt.subplots(figsize=(7, 5))
ax.axhline(0.5, color="k", lw=0.8, label="perfect reflector 1/2")

# lossless slab: reaches 1/2
m0 = Material(lossless_plasma(1.0), vacuum())
f0 = np.array([F_slab(m0, L, z)[0] for z in z_omega])
ax.semilogx(z_omega, f0, "b--", label="no damping (wp=1)")

# lossy slabs: plateau set by L*sigma(0)
for lsig, color in ((0.5, "tab:red"), (2.0, "tab:purple")):
    gamma = 0.5
    wp = math.sqrt(lsig * 2.0 * gamma / L)
    m = Material(drude_conductor(wp, gamma), vacuum())
    f = np.array([F_slab(m, L, z)[0] for z in z_omega])
    plateau = ret_F_slab_conductor(lsig).F_par
    ax.semilogx(z_omega, f, color=color, ls="-.",
                label=f"damped, L*sigma(0)={lsig}")
    ax.axhline(plateau, color=color, ls=":", lw=0.8)
    print(f"L*sigma(0)={lsig}: exact F_par({z_omega[-1]:.0f}) = {f[-1]:.5f}, "
          f"plateau formula {plateau:.5f}")

ax.set_xlabel("z_omega")
ax.set_ylabel("F_par")
ax.set_title("Conducting slab: losses cap the retarded plateau below 1/2")
ax.legend(fontsize=8)
fig.tight_layout()
fig.savefig(OUT / "slab_conductor_thickness.png", dpi=160)
print(f"wrote {OUT / 'slab_conductor_thickness.png'}")
