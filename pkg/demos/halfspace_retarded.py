"""Retarded limit near the plasma half-space: approach to the mirror value.

Far from the surface every good conductor looks like a perfect mirror and
the dimensionless shift coefficients tend to 1/2, so the shift itself falls
off as 1/Z^4.  The corrections are material-dependent; for a weak plasma
(wp below the transition frequency) they stay sizable even at tens of
wavelengths, which the four-term series tracks closely.

Run:  python demos/halfspace_retarded.py
Writes demos/output/halfspace_retarded.png
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from cpaniso.asymptotics import ret_F_plasma
from cpaniso.shifts import F_plasma_closed

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

z_omega = np.geomspace(2.0, 100.0, 25)
fig, ax = plt.subplots(figsize=(7, 5))
ax.axhline(0.5, color="k", lw=0.8, label="perfect reflector 1/2")

for wp, color in ((0.5, "tab:red"), (2.0, "tab:green"), (10.0, "tab:blue")):
    exact = np.array([F_plasma_closed(wp, z)[0] for z in z_omega])
    series = np.array([ret_F_plasma(wp, z).F_par for z in z_omega])
    ax.semilogx(z_omega, exact, color=color, label=f"F_par exact, wp={wp}")
    ax.semilogx(z_omega, series, color=color, ls="--", lw=0.9)
    i = -1
    print(f"wp={wp}: F_par({z_omega[i]:.0f}) = {exact[i]:.6f}, "
          f"series {series[i]:.6f}, diff {abs(exact[i]-series[i]):.2e}")

ax.set_xlabel("z_omega")
ax.set_ylabel("F_par")
ax.set_ylim(0.0, 0.55)
ax.set_title("Retarded regime: exact (solid) vs four-term series (dashed)")
ax.legend(fontsize=8)
fig.tight_layout()
fig.savefig(OUT / "halfspace_retarded.png", dpi=160)
print(f"wrote {OUT / 'halfspace_retarded.png'}")
