"""Reflection and transmission coefficients for a uniaxial half-space or slab.

The same physical interface appears in four variable parametrizations,
matching the four integral representations of the level shifts:

* real frequency (omega, q_par)        - `halfspace_real_freq`, `slab_real_freq`
* imaginary frequency (omega, k)       - `halfspace_imag_axis`, `slab_imag_axis`
* polar imaginary variables (x, y)     - `halfspace_xy`, `slab_xy`
* the bent kappa contour               - `halfspace_kappa`

TE coefficients see only eps_par; TM coefficients involve both axes through
sqrt(eps_par*eps_perp) and the medium wave vector
sqrt(eps_par/eps_perp)*sqrt(eps_perp*w^2 - q^2), each root taken with
Im >= 0 independently.

Conductor responses diverge at zero imaginary frequency, so every
imaginary-axis routine works with the finite combinations eps*w^2 and
(eps-1)*y^2 from `materials` and takes ratio/product limits from the
small-frequency classification `static_divergence`; coefficients stay
finite and correct down to w = 0 without ever forming inf - inf.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .materials import (
    AxisResponse,
    Material,
    eps_minus_one_y2,
    eps_xi_times_w2,
    eval_imag_axis,
    eval_real_axis,
    static_divergence,
    static_epsilon,
)
from .specfun import sqrt_upper

__all__ = [
    "Polarization",
    "InterfaceCoeffs",
    "halfspace_real_freq",
    "halfspace_imag_axis",
    "halfspace_xy",
    "slab_imag_axis",
    "slab_xy",
    "slab_real_freq",
    "halfspace_kappa",
]


class Polarization(enum.Enum):
    TE = "TE"
    TM = "TM"


@dataclass(frozen=True)
class InterfaceCoeffs:
    """Single-interface coefficients and wave vectors at real frequency."""

    r_te: complex
    r_tm: complex
    t_te: complex
    t_tm: complex
    kz: complex
    kzd_te: complex
    kzd_tm: complex


def halfspace_real_freq(m: Material, omega: float, q_par: float) -> InterfaceCoeffs:
    """Fresnel coefficients of the uniaxial half-space at real frequency.

    kz = sqrt(w^2 - q^2), kzd_te = sqrt(eps_par*w^2 - q^2),
    kzd_tm = sqrt(eps_par/eps_perp)*sqrt(eps_perp*w^2 - q^2), all with
    Im >= 0;

        r_te = (kz - kzd_te)/(kz + kzd_te)
        r_tm = (eps_par*kz - kzd_tm)/(eps_par*kz + kzd_tm)
        t_te = 2*kz/(kz + kzd_te)
        t_tm = 2*sqrt(eps_par)*kz/(eps_par*kz + kzd_tm)
    """
    if not (omega > 0):
        raise ValueError("omega must be > 0")
    if q_par < 0:
        raise ValueError("q_par must be >= 0")
    ep = eval_real_axis(m.par, omega)
    et = eval_real_axis(m.perp, omega)
    w2 = omega * omega
    q2 = q_par * q_par
    kz = sqrt_upper(w2 - q2)
    kzd_te = sqrt_upper(ep * w2 - q2)
    kzd_tm = sqrt_upper(ep / et) * sqrt_upper(et * w2 - q2)
    if kzd_tm.imag < 0.0:
        # the factor product can leave the upper half-plane for mixed
        # lossy/negative-eps axes; the transmitted wave must still decay
        kzd_tm = -kzd_tm
    r_te = (kz - kzd_te) / (kz + kzd_te)
    r_tm = (ep * kz - kzd_tm) / (ep * kz + kzd_tm)
    t_te = 2.0 * kz / (kz + kzd_te)
    t_tm = 2.0 * sqrt_upper(ep) * kz / (ep * kz + kzd_tm)
    return InterfaceCoeffs(r_te, r_tm, t_te, t_tm, kz, kzd_te, kzd_tm)


def _sqrt_pair_product(m: Material, w):
    """sqrt(eps_par(iw)*eps_perp(iw)); inf where a conductor makes it diverge."""
    ep = np.asarray(eval_imag_axis(m.par, w), dtype=float)
    et = np.asarray(eval_imag_axis(m.perp, w), dtype=float)
    return np.sqrt(ep * et)


def _sqrt_pair_ratio(m: Material, w: float) -> float:
    """sqrt(eps_par(iw)/eps_perp(iw)) with the algebraic w = 0 limit.

    At w = 0 the limit is set by the divergence orders p of the two axes:
    inf for p_par > p_perp, 0 for p_par < p_perp, sqrt(c_par/c_perp) when
    they diverge (or stay finite) at the same rate.
    """
    if w > 0:
        return math.sqrt(eval_imag_axis(m.par, w) / eval_imag_axis(m.perp, w))
    p1, c1 = static_divergence(m.par)
    p2, c2 = static_divergence(m.perp)
    if p1 > p2:
        return math.inf
    if p1 < p2:
        return 0.0
    return math.sqrt(c1 / c2)


def halfspace_imag_axis(m: Material, omega: float, k: float) -> tuple[float, float]:
    """Half-space reflection coefficients on the imaginary frequency axis.

        r_te = (k0 - sqrt(eps_par*w^2 + k^2))/(k0 + sqrt(eps_par*w^2 + k^2))
        r_tm = (sqrt(eps_par*eps_perp)*k0 - sqrt(eps_perp*w^2 + k^2))
               /(sqrt(eps_par*eps_perp)*k0 + sqrt(eps_perp*w^2 + k^2))

    with k0 = sqrt(w^2 + k^2) and eps at i*w.  Both values are real;
    r_te in (-1, 0], r_tm in [0, 1) for passive media.  Conductors at
    w = 0 are evaluated through eps*w^2, which stays finite.
    """
    if omega < 0 or k < 0 or (omega == 0.0 and k == 0.0):
        raise ValueError("need omega, k >= 0 and not both zero")
    k2 = k * k
    kappa0 = math.hypot(omega, k)
    root_te = math.sqrt(eps_xi_times_w2(m.par, omega) + k2)
    r_te = (kappa0 - root_te) / (kappa0 + root_te)
    root_tm = math.sqrt(eps_xi_times_w2(m.perp, omega) + k2)
    sp = float(_sqrt_pair_product(m, omega))
    # written as 1 - 2*root/(sp*k0 + root) so sp = inf gives the limit 1
    r_tm = 1.0 - 2.0 * root_tm / (sp * kappa0 + root_tm)
    return r_te, r_tm


def halfspace_xy(m: Material, omega_mg: float, x, y):
    """Half-space coefficients in the polar variables of the shift integrals.

        r_te = (1 - sqrt(y^2*(eps_par-1) + 1))/(1 + sqrt(...))
        r_tm = (sqrt(eps_par*eps_perp) - sqrt(y^2*(eps_perp-1) + 1))
               /(sqrt(eps_par*eps_perp) + sqrt(...))

    with eps at i*x*y*omega_mg.  Vectorized over x and/or y (broadcast);
    the conductor y -> 0 limit enters through (eps-1)*y^2 kept finite.
    """
    if not (omega_mg > 0):
        raise ValueError("omega_mg must be > 0")
    root_te = np.sqrt(1.0 + eps_minus_one_y2(m.par, x, y, omega_mg))
    r_te = (1.0 - root_te) / (1.0 + root_te)
    root_tm = np.sqrt(1.0 + eps_minus_one_y2(m.perp, x, y, omega_mg))
    xi = np.asarray(x, dtype=float) * np.asarray(y, dtype=float) * omega_mg
    sp = _sqrt_pair_product(m, xi)
    r_tm = 1.0 - 2.0 * root_tm / (sp + root_tm)
    return r_te, r_tm


def _slab_fold(r, expfac):
    """Slab coefficient r*(1 - E)/(1 - r^2 E) from the single interface."""
    return r * (1.0 - expfac) / (1.0 - r * r * expfac)


def _slab_tm_corner(m: Material, L: float, k: float) -> float:
    """TM slab coefficient at w = 0 when sqrt(eps_par/eps_perp) -> 0.

    Here r_tm -> 1 and exp(-2*kzd*L) -> 1 simultaneously; the limit along
    w -> 0+ is 1 for a conducting parallel axis and
    L*k*eps_par(0)/(2 + L*k*eps_par(0)) for a dielectric one.
    """
    p_par, c_par = static_divergence(m.par)
    if p_par > 0:
        return 1.0
    u = L * k * c_par
    return u / (2.0 + u)


def slab_imag_axis(m: Material, L: float, omega: float, k: float) -> tuple[float, float]:
    """Slab reflection coefficients on the imaginary axis.

        R = r*(1 - exp(-2*kzd*L))/(1 - r^2*exp(-2*kzd*L))

    per polarization, with kzd_te = sqrt(eps_par*w^2 + k^2) and
    kzd_tm = sqrt(eps_par/eps_perp)*sqrt(eps_perp*w^2 + k^2).  |R| <= |r|,
    R -> r as L -> inf and R -> 0 as L -> 0+.
    """
    if not (L > 0):
        raise ValueError("slab thickness L must be > 0")
    r_te, r_tm = halfspace_imag_axis(m, omega, k)
    k2 = k * k
    kzd_te = math.sqrt(eps_xi_times_w2(m.par, omega) + k2)
    R_te = _slab_fold(r_te, math.exp(-2.0 * kzd_te * L))
    ratio = _sqrt_pair_ratio(m, omega)
    if ratio == 0.0 and omega == 0.0:
        return R_te, _slab_tm_corner(m, L, k)
    kzd_tm = ratio * math.sqrt(eps_xi_times_w2(m.perp, omega) + k2)
    R_tm = _slab_fold(r_tm, math.exp(-2.0 * kzd_tm * L))
    return R_te, R_tm


def slab_xy(m: Material, L: float, omega_mg: float, x, y):
    """Slab coefficients in the polar variables (the tilded slab set).

    Same fold as `slab_imag_axis` with medium wave vectors
    kzd_te = x*omega_mg*sqrt((eps_par-1)*y^2 + 1) and
    kzd_tm = x*omega_mg*sqrt(eps_par/eps_perp)*sqrt((eps_perp-1)*y^2 + 1).
    Vectorized over x and/or y.
    """
    if not (L > 0):
        raise ValueError("slab thickness L must be > 0")
    if not (omega_mg > 0):
        raise ValueError("omega_mg must be > 0")
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    A_par = eps_minus_one_y2(m.par, x, y, omega_mg)
    A_perp = eps_minus_one_y2(m.perp, x, y, omega_mg)
    root_te = np.sqrt(1.0 + A_par)
    r_te = (1.0 - root_te) / (1.0 + root_te)
    xi = x * y * omega_mg
    sp = _sqrt_pair_product(m, xi)
    root_tm = np.sqrt(1.0 + A_perp)
    r_tm = 1.0 - 2.0 * root_tm / (sp + root_tm)

    kzd_te = x * omega_mg * root_te
    R_te = _slab_fold(r_te, np.exp(-2.0 * kzd_te * L))
    ep = np.asarray(eval_imag_axis(m.par, xi), dtype=float)
    et = np.asarray(eval_imag_axis(m.perp, xi), dtype=float)
    with np.errstate(invalid="ignore"):
        ratio = np.sqrt(ep / et)
    if np.any(~np.isfinite(ratio)):
        # conductor axes at xi = 0: substitute the algebraic limit
        lim = _sqrt_pair_ratio(m, 0.0)
        ratio = np.where(np.isfinite(ratio), ratio, lim)
    kzd_tm = x * omega_mg * ratio * root_tm
    expo = np.exp(-2.0 * kzd_tm * L)
    corner = (expo == 1.0) & (r_tm == 1.0)
    if np.any(corner):
        k_here = x * omega_mg * np.sqrt(1.0 - y * y) + 0.0 * expo
        R_tm = np.where(corner, _slab_tm_corner_arr(m, L, k_here), _slab_fold(r_tm, np.where(corner, 0.0, expo)))
    else:
        R_tm = _slab_fold(r_tm, expo)
    out_te = np.asarray(R_te)
    out_tm = np.asarray(R_tm)
    if out_te.ndim == 0:
        return out_te.item(), out_tm.item()
    return out_te, out_tm


def _slab_tm_corner_arr(m: Material, L: float, k):
    p_par, c_par = static_divergence(m.par)
    k = np.asarray(k, dtype=float)
    if p_par > 0:
        return np.ones_like(k)
    u = L * k * c_par
    return u / (2.0 + u)


def slab_real_freq(m: Material, L: float, omega: float, q_par: float):
    """Slab reflection and transmission at real frequency.

        T = (1 - r^2)*exp(i*(kzd - kz)*L)/(1 - r^2*exp(2i*kzd*L))
        R = r*(1 - exp(2i*kzd*L))*exp(-i*kz*L)/(1 - r^2*exp(2i*kzd*L))

    per polarization (single-interface r and wave vectors from
    `halfspace_real_freq`).  Returns (R_te, R_tm, T_te, T_tm).
    """
    if not (L > 0):
        raise ValueError("slab thickness L must be > 0")
    c = halfspace_real_freq(m, omega, q_par)
    out = []
    for r, kzd in ((c.r_te, c.kzd_te), (c.r_tm, c.kzd_tm)):
        phase = np.exp(2j * kzd * L)
        den = 1.0 - r * r * phase
        R = r * (1.0 - phase) * np.exp(-1j * c.kz * L) / den
        T = (1.0 - r * r) * np.exp(1j * (kzd - c.kz) * L) / den
        out.append((R, T))
    (R_te, T_te), (R_tm, T_tm) = out
    return R_te, R_tm, T_te, T_tm


def halfspace_kappa(m: Material, omega_abs: float, kappa: complex) -> tuple[complex, complex]:
    """Half-space coefficients on the bent kappa contour (real-frequency eps).

        r_te = (kappa - sqrt(eps_par - 1 + kappa^2))/(kappa + sqrt(...))
        r_tm = (sqrt(eps_par*eps_perp)*kappa - sqrt(eps_perp - 1 + kappa^2))
               /(sqrt(eps_par*eps_perp)*kappa + sqrt(...))

    with eps at the real frequency omega_abs = |omega_mi| and every root
    through `sqrt_upper`; sqrt(eps_par*eps_perp) is taken factor by factor
    so lossless negative-eps media continue the lossy case correctly.
    """
    if not (omega_abs > 0):
        raise ValueError("omega_abs must be > 0")
    kappa = complex(kappa)
    ep = eval_real_axis(m.par, omega_abs)
    et = eval_real_axis(m.perp, omega_abs)
    root_te = sqrt_upper(ep - 1.0 + kappa * kappa)
    r_te = (kappa - root_te) / (kappa + root_te)
    sp = sqrt_upper(ep) * sqrt_upper(et)
    root_tm = sqrt_upper(et - 1.0 + kappa * kappa)
    r_tm = (sp * kappa - root_tm) / (sp * kappa + root_tm)
    return r_te, r_tm
