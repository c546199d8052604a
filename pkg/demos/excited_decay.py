"""Excited emitter near a lossy conductor: level shift and decay change.

Excited states pick up a residue term on top of the imaginary-axis shift;
its real part shifts the level, its imaginary part changes the spontaneous
decay rate (dGamma = -2 Im).  Close to the surface both scale as 1/Z^3;
far out they oscillate with the round-trip phase 2|w|Z like a classical
antenna above a mirror.  The closed-form limits from both regimes frame
the exact contour integration.

Run:  python demos/excited_decay.py
Writes demos/output/excited_decay.png
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from cpaniso import Material, drude_conductor
from cpaniso.asymptotics import excited_nr_hs, excited_ret_hs
from cpaniso.shifts import Transition, excited_residue

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

m = Material(drude_conductor(3.0, 0.5), drude_conductor(3.0, 0.5))
t = Transition(-1.0, 1.0, 1.0)

Z = np.geomspace(0.02, 8.0, 60)
res = np.array([excited_residue(t, m, z) for z in Z])
nr = np.array([excited_nr_hs(t, m, z) for z in Z])
rt = np.array([excited_ret_hs(t, m, z) for z in Z])

fig, (ax1, ax2) = plt.subplots(2, 1, figsize=(7, 7), sharex=True)
ax1.loglog(Z, np.abs(res.real), "k-", label="|Re dE*| exact contour")
ax1.loglog(Z, np.abs(nr[:, 0]), "r--", label="nonretarded 1/Z^3 form")
ax1.loglog(Z, np.abs(rt[:, 0]), "b:", label="retarded oscillatory form")
ax1.set_ylabel("|residue shift|")
ax1.legend(fontsize=8)

dG = -2.0 * res.imag
ax2.loglog(Z, np.abs(dG), "k-", label="|dGamma| exact")
ax2.loglog(Z, np.abs(nr[:, 1]), "r--", label="nonretarded")
ax2.loglog(Z, np.abs(rt[:, 1]), "b:", label="retarded")
ax2.set_xlabel("Z (units 1/omega_ref; |omega_mi| = 1)")
ax2.set_ylabel("|decay-rate change|")
ax2.legend(fontsize=8)

print(f"Z=0.02: Re dE* = {res.real[0]:.4g} (closed form {nr[0, 0]:.4g})")
print(f"Z=8:    dGamma = {dG[-1]:.4g} (closed form {rt[-1, 1]:.4g})")
fig.tight_layout()
fig.savefig(OUT / "excited_decay.png", dpi=160)
print(f"wrote {OUT / 'excited_decay.png'}")
