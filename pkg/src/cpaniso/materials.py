"""Per-axis optical response models for uniaxial media.

A uniaxial medium is described by two axis responses: eps_par for fields in
the surface plane and eps_perp for fields along the surface normal.  Each
axis is a single-resonance oscillator

    eps(w) = 1 + omega_p^2 / (omega_t^2 - w^2 - 2i*gamma*w)

or one of its degenerate limits (Drude conductor omega_t = 0, lossless
plasma omega_t = gamma = 0), a nondispersive dielectric eps = n^2, or
vacuum.  All frequencies are dimensionless, measured in units of a single
reference frequency; hbar = c = 1 and eps0 = 1 throughout the package.

On the positive imaginary frequency axis every passive response is real
and >= 1,

    eps(i*xi) = 1 + omega_p^2 / (xi^2 + omega_t^2 + 2*gamma*xi),

which is the representation the shift integrals use.  Conductor variants
diverge at xi = 0; `eval_imag_axis` returns math.inf there and the Fresnel
layer computes reflection coefficients through finite combinations such as
eps(i*xi)*xi^2 instead of eps alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "AxisResponse",
    "Material",
    "drude_lorentz",
    "drude_conductor",
    "lossless_plasma",
    "dielectric",
    "vacuum",
    "eval_imag_axis",
    "eval_real_axis",
    "static_conductivity",
    "static_epsilon",
    "eps_xi_times_w2",
    "eps_minus_one_y2",
    "static_divergence",
]

# variant tags
DRUDE_LORENTZ = "drude_lorentz"
DRUDE = "drude_conductor"
PLASMA = "lossless_plasma"
DIELECTRIC = "dielectric"
VACUUM = "vacuum"

_KINDS = (DRUDE_LORENTZ, DRUDE, PLASMA, DIELECTRIC, VACUUM)
_OSCILLATOR_KINDS = (DRUDE_LORENTZ, DRUDE, PLASMA)


@dataclass(frozen=True)
class AxisResponse:
    """One axis of the permittivity tensor.

    Parameters are dimensionless (units of the reference frequency).  Use
    the module-level constructors (`drude_lorentz`, `drude_conductor`,
    `lossless_plasma`, `dielectric`, `vacuum`) rather than instantiating
    directly; they validate parameter ranges per variant.
    """

    kind: str
    omega_p: float = 0.0
    omega_t: float = 0.0
    gamma: float = 0.0
    n: float = 1.0

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ValueError(f"unknown axis-response kind {self.kind!r}")
        for name in ("omega_p", "omega_t", "gamma", "n"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise ValueError(f"{name} must be finite, got {v!r}")
        if self.omega_p < 0 or self.omega_t < 0 or self.gamma < 0:
            raise ValueError("omega_p, omega_t, gamma must be >= 0")
        if self.kind == DRUDE and self.gamma <= 0:
            raise ValueError("drude_conductor requires gamma > 0")
        if self.kind == DIELECTRIC and self.n < 1:
            raise ValueError("dielectric requires n >= 1")

    @property
    def is_conducting(self) -> bool:
        """True when eps diverges at zero frequency (omega_t = 0 oscillator)."""
        return self.kind in (DRUDE, PLASMA) and self.omega_p > 0

    def scaled(self, factor: float) -> "AxisResponse":
        """Same physical response expressed in a rescaled frequency unit.

        eps(i*xi; p) evaluated with all frequency-like parameters p
        multiplied by `factor` equals the original response at xi/factor.
        Used to re-express materials in units of one transition frequency.
        """
        if factor <= 0 or not math.isfinite(factor):
            raise ValueError("scale factor must be positive and finite")
        if self.kind in (DIELECTRIC, VACUUM):
            return self
        return AxisResponse(
            self.kind,
            omega_p=self.omega_p * factor,
            omega_t=self.omega_t * factor,
            gamma=self.gamma * factor,
        )


def drude_lorentz(omega_p: float, omega_t: float, gamma: float) -> AxisResponse:
    return AxisResponse(DRUDE_LORENTZ, omega_p=omega_p, omega_t=omega_t, gamma=gamma)


def drude_conductor(omega_p: float, gamma: float) -> AxisResponse:
    return AxisResponse(DRUDE, omega_p=omega_p, gamma=gamma)


def lossless_plasma(omega_p: float) -> AxisResponse:
    return AxisResponse(PLASMA, omega_p=omega_p)


def dielectric(n: float) -> AxisResponse:
    return AxisResponse(DIELECTRIC, n=n)


def vacuum() -> AxisResponse:
    return AxisResponse(VACUUM)


@dataclass(frozen=True)
class Material:
    """Uniaxial permittivity tensor diag(par, par, perp)."""

    par: AxisResponse
    perp: AxisResponse

    @property
    def is_vacuum(self) -> bool:
        return _is_unity(self.par) and _is_unity(self.perp)

    def scaled(self, factor: float) -> "Material":
        return Material(self.par.scaled(factor), self.perp.scaled(factor))


def _is_unity(r: AxisResponse) -> bool:
    if r.kind == VACUUM:
        return True
    if r.kind == DIELECTRIC:
        return r.n == 1.0
    return r.omega_p == 0.0


def eval_imag_axis(r: AxisResponse, xi):
    """eps(i*xi) for xi >= 0.  Real, >= 1; math.inf for conductors at xi = 0.

    Accepts a scalar or ndarray xi; divergent entries come back as inf and
    are meant to be consumed through the finite reformulations below, never
    fed into naive arithmetic like inf - inf.
    """
    xi = np.asarray(xi, dtype=float)
    if np.any(xi < 0):
        raise ValueError("xi must be >= 0")
    if r.kind == VACUUM:
        out = np.ones_like(xi)
    elif r.kind == DIELECTRIC:
        out = np.full_like(xi, r.n * r.n)
    else:
        den = xi * xi + r.omega_t * r.omega_t + 2.0 * r.gamma * xi
        at_pole = np.inf if r.omega_p > 0 else 0.0
        frac = np.where(den > 0, r.omega_p**2 / np.where(den > 0, den, 1.0), at_pole)
        out = 1.0 + frac
    return out.item() if out.ndim == 0 else out


def eval_real_axis(r: AxisResponse, omega: float) -> complex:
    """eps(omega) on the positive real frequency axis.

    eps = 1 + omega_p^2/(omega_t^2 - omega^2 - 2i*gamma*omega); Im(eps) >= 0
    for passive media and exactly 0 when gamma = 0.
    """
    if not (omega > 0):
        raise ValueError("omega must be > 0")
    if r.kind == VACUUM:
        return 1.0 + 0.0j
    if r.kind == DIELECTRIC:
        return complex(r.n * r.n)
    den = r.omega_t * r.omega_t - omega * omega - 2j * r.gamma * omega
    return 1.0 + r.omega_p * r.omega_p / den


def static_conductivity(r: AxisResponse):
    """DC conductivity omega_p^2/(2*gamma) of a conductor axis.

    Returns math.inf for the lossless plasma (gamma = 0).  Dielectric-type
    variants have no DC conductivity and are rejected.
    """
    if r.kind == DRUDE:
        return r.omega_p * r.omega_p / (2.0 * r.gamma)
    if r.kind == PLASMA:
        return math.inf if r.omega_p > 0 else 0.0
    raise ValueError(f"static_conductivity undefined for {r.kind!r}")


def static_epsilon(r: AxisResponse):
    """eps(0): 1 + omega_p^2/omega_t^2, n^2, 1, or math.inf for conductors."""
    if r.kind == VACUUM:
        return 1.0
    if r.kind == DIELECTRIC:
        return r.n * r.n
    if r.kind == DRUDE_LORENTZ and r.omega_t > 0:
        return 1.0 + (r.omega_p / r.omega_t) ** 2
    return math.inf if r.omega_p > 0 else 1.0


# ---------------------------------------------------------------------------
# finite reformulations used by the Fresnel layer near xi = 0

def eps_xi_times_w2(r: AxisResponse, w):
    """eps(i*w)*w^2, finite for every variant at every w >= 0.

    For oscillators this is w^2 + omega_p^2*w^2/(w^2 + omega_t^2 + 2*gamma*w),
    which tends to 0 (Drude), omega_p^2 (plasma) or 0 (dielectric types) as
    w -> 0, removing the 1/w divergence of eps itself.
    """
    w = np.asarray(w, dtype=float)
    if r.kind == VACUUM:
        out = w * w
    elif r.kind == DIELECTRIC:
        out = (r.n * r.n) * w * w
    elif r.kind == PLASMA:
        out = w * w + r.omega_p * r.omega_p
    elif r.kind == DRUDE:
        out = w * w + r.omega_p * r.omega_p * w / (w + 2.0 * r.gamma)
    else:
        den = w * w + r.omega_t * r.omega_t + 2.0 * r.gamma * w
        out = w * w + np.where(den > 0, r.omega_p**2 * w * w / np.where(den > 0, den, 1.0), 0.0)
    return out.item() if out.ndim == 0 else out


def eps_minus_one_y2(r: AxisResponse, x, y, omega_mg: float):
    """y^2*(eps(i*x*y*omega_mg) - 1), finite for all x > 0, y >= 0.

    This is the combination entering the polar-variable reflection
    coefficients; written per variant so the y -> 0 conductor limit is the
    algebraic one (omega_p^2/(x*omega_mg)^2 for a plasma, 0 for a Drude
    conductor) instead of 0*inf.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if r.kind == VACUUM:
        out = 0.0 * x * y
    elif r.kind == DIELECTRIC:
        out = (r.n * r.n - 1.0) * y * y + 0.0 * x
    elif r.kind == PLASMA:
        out = (r.omega_p / omega_mg) ** 2 / (x * x) + 0.0 * y
    elif r.kind == DRUDE:
        # divide numerator and denominator of y^2*wp^2/(xi^2 + 2 g xi) by y
        out = r.omega_p**2 * y / (x * x * y * omega_mg**2 + 2.0 * r.gamma * x * omega_mg)
    else:
        xi = x * y * omega_mg
        out = r.omega_p**2 * y * y / (xi * xi + r.omega_t**2 + 2.0 * r.gamma * xi)
    out = np.asarray(out)
    return out.item() if out.ndim == 0 else out


def static_divergence(r: AxisResponse) -> tuple[int, float]:
    """Leading small-xi behaviour of eps(i*xi): (order p, coefficient c).

    eps(i*xi) ~ c / xi^p as xi -> 0 with p = 2 (plasma), 1 (Drude,
    c = sigma(0)), or 0 (everything else, c = eps(0)).  Used to take
    ratio/product limits of two axes at xi = 0.
    """
    if r.kind == PLASMA and r.omega_p > 0:
        return 2, r.omega_p * r.omega_p
    if r.kind == DRUDE and r.omega_p > 0:
        return 1, r.omega_p * r.omega_p / (2.0 * r.gamma)
    eps0 = static_epsilon(r)
    return 0, eps0
