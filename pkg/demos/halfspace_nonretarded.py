"""Nonretarded shift near a graphite-like half-space.

A rubidium-like emitter (strong transition at reference frequency 1) sits
above a medium that conducts along the surface like a stack of graphene
sheets - lossless plasma response at 0.29 transition frequencies - and does
not respond at all along the normal.  Close to the surface the shift falls
off as 1/Z^3, so F/z_omega approaches a constant; the four-term
nonretarded bracket captures that constant to well under a percent.

Run:  python demos/halfspace_nonretarded.py
Writes demos/output/halfspace_nonretarded.png
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from cpaniso.asymptotics import nr_F_plasma
from cpaniso.shifts import F_plasma_closed

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

z_omega = np.geomspace(3e-3, 1.0, 25)
fig, ax = plt.subplots(figsize=(7, 5))

for wp, color in ((0.29, "tab:blue"), (1.0, "tab:orange"), (2.0, "tab:green")):
    exact_par = np.array([F_plasma_closed(wp, z)[0] for z in z_omega])
    exact_perp = np.array([F_plasma_closed(wp, z)[1] for z in z_omega])
    nr = nr_F_plasma(wp, 1.0)           # bracket only; F = z_omega * bracket
    ax.loglog(z_omega, exact_par / z_omega, color=color,
              label=f"F_par exact, wp={wp}")
    ax.loglog(z_omega, exact_perp / z_omega, color=color, ls=":",
              label=f"F_perp exact, wp={wp}")
    ax.axhline(nr.F_par, color=color, ls="--", lw=0.8)
    ax.axhline(nr.F_perp, color=color, ls="-.", lw=0.8)
    print(f"wp={wp}: F_par/zw at zw=0.003 -> {exact_par[0]/z_omega[0]:.6f} "
          f"(bracket {nr.F_par:.6f})")

ax.set_xlabel("z_omega = Z * transition frequency")
ax.set_ylabel("F / z_omega")
ax.set_title("Nonretarded regime: F/z_omega flattens to the bracket constants")
ax.legend(fontsize=8)
fig.tight_layout()
fig.savefig(OUT / "halfspace_nonretarded.png", dpi=160)
print(f"wrote {OUT / 'halfspace_nonretarded.png'}")
