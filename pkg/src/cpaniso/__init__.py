"""Casimir-Polder shifts and decay rates near uniaxial anisotropic media.

Library layout:

* `materials`   - per-axis permittivity models (oscillator, conductor,
                  plasma, dielectric, vacuum) on both frequency axes
* `specfun`     - branch-safe sqrt, Gauss 2F1, arctan continuation
* `fresnel`     - half-space and slab coefficients in all parametrizations
* `quadrature`  - deterministic adaptive Gauss-Kronrod engines
* `shifts`      - exact shift/decay evaluation by quadrature
* `asymptotics` - closed-form nonretarded and retarded expansions
* `oracle`      - independent brute-force reference paths for validation
* `cli`         - batch front end (`cpaniso` command)

Everything is dimensionless: frequencies in units of a reference frequency,
lengths in its inverse, hbar = c = eps0 = 1.
"""

from .materials import (
    AxisResponse,
    Material,
    dielectric,
    drude_conductor,
    drude_lorentz,
    eval_imag_axis,
    eval_real_axis,
    lossless_plasma,
    static_conductivity,
    static_epsilon,
    vacuum,
)
from .quadrature import QuadResult, QuadSpec
from .shifts import (
    AtomSpec,
    Geometry,
    ShiftResult,
    Transition,
    F_halfspace,
    F_plasma_closed,
    F_slab,
    excited_residue,
    excited_total,
    ground_shift,
    ground_shift_nonret,
)
from .asymptotics import (
    ExpansionResult,
    excited_nr_hs,
    excited_ret_hs,
    nr_F_plasma,
    nr_image_shift_coefficient,
    ret_F_conductor_dielectric_hs,
    ret_F_conductor_hs,
    ret_F_conductor_lossless_hs,
    ret_F_plasma,
    ret_F_plasma_dielectric_hs,
    ret_F_slab_conductor,
    ret_F_slab_dielectric,
)

__version__ = "0.1.0"

__all__ = [
    "AxisResponse", "Material", "dielectric", "drude_conductor",
    "drude_lorentz", "lossless_plasma", "vacuum", "eval_imag_axis",
    "eval_real_axis", "static_conductivity", "static_epsilon",
    "QuadSpec", "QuadResult",
    "Transition", "AtomSpec", "Geometry", "ShiftResult",
    "F_halfspace", "F_slab", "F_plasma_closed", "ground_shift",
    "ground_shift_nonret", "excited_residue", "excited_total",
    "ExpansionResult", "nr_image_shift_coefficient", "ret_F_conductor_hs",
    "ret_F_conductor_lossless_hs", "ret_F_conductor_dielectric_hs",
    "ret_F_plasma_dielectric_hs", "nr_F_plasma", "ret_F_plasma",
    "ret_F_slab_conductor", "ret_F_slab_dielectric", "excited_nr_hs",
    "excited_ret_hs",
    "__version__",
]
