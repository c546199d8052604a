"""Closed-form nonretarded and retarded expansions of the shift coefficients.

Fast approximations and independent validation targets for the quadrature
paths.  Apart from the nonretarded image-factor integral (a 1D quadrature
shared with `shifts`), every function is plain arithmetic over expansion
coefficients, with `hyp2f1` where the conductor/dielectric half-space needs
it, so results are bit-deterministic.

The library never auto-selects between an expansion and the exact path;
each result carries its regime tag and the caller decides.  The expansions
hold only deep in their regimes and several do not commute with material
limits (vacuum, no damping), so use against the exact path needs care.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .materials import Material, eval_real_axis
from .quadrature import QuadSpec
from .shifts import Transition, image_factor_integral
from .specfun import arccot_cont, hyp2f1, sqrt_upper

__all__ = [
    "ExpansionResult",
    "nr_image_shift_coefficient",
    "ret_F_conductor_hs",
    "ret_F_conductor_lossless_hs",
    "ret_F_conductor_dielectric_hs",
    "ret_F_plasma_dielectric_hs",
    "nr_F_plasma",
    "ret_F_plasma",
    "ret_F_slab_conductor",
    "ret_F_slab_dielectric",
    "conductor_dielectric_coeffs",
    "plasma_dielectric_c5",
    "excited_nr_hs",
    "excited_ret_hs",
]

_SQ_PI_2 = math.sqrt(math.pi / 2.0)


@dataclass(frozen=True)
class ExpansionResult:
    F_par: float
    F_perp: float
    terms_used: int
    regime_tag: str  # "nonretarded" | "retarded"


def nr_image_shift_coefficient(m: Material, omega_mg: float,
                               spec: QuadSpec = QuadSpec()) -> float:
    """Frequency-weighted anisotropic image factor of the nonretarded shift.

    The caller multiplies by -(mu_par^2 + 2 mu_perp^2)/(32 pi^2 Z^3); the
    perfect-reflector value is pi/2.
    """
    if not (omega_mg > 0):
        raise ValueError("omega_mg must be > 0")
    return image_factor_integral(m, omega_mg, spec)


def ret_F_conductor_hs(sigma0_par: float, Z: float) -> ExpansionResult:
    """Retarded F pair for a lossy conductor on both axes.

        F = 1/2 [1 - C_{9/2}/sqrt(sigma0*Z) + C_5/(sigma0*Z)]

    with C_par_{9/2} = (21/16) sqrt(pi/2), C_perp_{9/2} = (7/12) sqrt(pi/2),
    C_par_5 = 9/4, C_perp_5 = 1/2.  The leading 1/2 is the perfect-reflector
    constant; to this order the perpendicular response does not enter.
    """
    if not (sigma0_par > 0 and Z > 0):
        raise ValueError("sigma0_par and Z must be > 0")
    u = sigma0_par * Z
    f_par = 0.5 * (1.0 - (21.0 / 16.0) * _SQ_PI_2 / math.sqrt(u) + 2.25 / u)
    f_perp = 0.5 * (1.0 - (7.0 / 12.0) * _SQ_PI_2 / math.sqrt(u) + 0.5 / u)
    return ExpansionResult(f_par, f_perp, 3, "retarded")


def ret_F_conductor_lossless_hs(omega_p_par: float, Z: float) -> ExpansionResult:
    """Retarded F pair for an undamped conductor: F = 1/2 (1 - C_5/(Z wp)),
    C_par_5 = 2, C_perp_5 = 4/5."""
    if not (omega_p_par > 0 and Z > 0):
        raise ValueError("omega_p_par and Z must be > 0")
    u = Z * omega_p_par
    return ExpansionResult(0.5 * (1.0 - 2.0 / u), 0.5 * (1.0 - 0.8 / u), 2, "retarded")


# frozen Taylor model of C_perp_{9/2}(n) about its removable n = 1 point:
# value (3/16) sqrt(pi/2), slope and curvature from a 60-digit evaluation
_CP92_N1 = 3.0 / 16.0 * _SQ_PI_2
_CP92_N1_D1 = 0.21363309158786936
_CP92_N1_D2 = -0.5269616259167444


def conductor_dielectric_coeffs(n_perp: float) -> tuple[float, float, float, float]:
    """(C_par_{9/2}, C_perp_{9/2}, C_par_5, C_perp_5) for the lossy-conductor
    parallel axis with nondispersive dielectric perpendicular axis.

        C_par_{9/2}  = sqrt(pi/2) [21/64 + (35/64)(1/n) 2F1(-1/2,3/4;7/4;1-n^2)]
        C_perp_{9/2} = sqrt(pi/2) (7/8)/(n^2-1) [n^2/3 - 1/2
                        + (1/2) 2F1(5/4,1;7/4;1-n^2)
                        - 1/(3n) 2F1(1/2,3/4;7/4;1-n^2)]
        C_par_5      = (3/8)(3n^2+1)/n^2
        C_perp_5     = (n^2+2)/(4n^2)

    The 1/(n^2-1) bracket has a removable singularity at n = 1 (limit
    (3/16) sqrt(pi/2)); for |n-1| < 1e-4 a local Taylor model avoids the
    cancellation.
    """
    n = n_perp
    if not (n >= 1):
        raise ValueError("n_perp must be >= 1")
    z = 1.0 - n * n
    c92_par = _SQ_PI_2 * (21.0 / 64.0 + (35.0 / 64.0) / n * hyp2f1(-0.5, 0.75, 1.75, z))
    if abs(n - 1.0) < 1e-4:
        d = n - 1.0
        c92_perp = _CP92_N1 + _CP92_N1_D1 * d + 0.5 * _CP92_N1_D2 * d * d
    else:
        bracket = (n * n / 3.0 - 0.5
                   + 0.5 * hyp2f1(1.25, 1.0, 1.75, z)
                   - hyp2f1(0.5, 0.75, 1.75, z) / (3.0 * n))
        c92_perp = _SQ_PI_2 * (7.0 / 8.0) * bracket / (n * n - 1.0)
    c5_par = 0.375 * (3.0 * n * n + 1.0) / (n * n)
    c5_perp = (n * n + 2.0) / (4.0 * n * n)
    return c92_par, c92_perp, c5_par, c5_perp


def ret_F_conductor_dielectric_hs(sigma0_par: float, n_perp: float, Z: float) -> ExpansionResult:
    """Retarded F pair for lossy conductor (par) / nondispersive dielectric
    (perp): F = 1/2 [1 - C_{9/2}/sqrt(sigma0*Z) + C_5/(sigma0*Z)] with the
    hypergeometric coefficients of `conductor_dielectric_coeffs`."""
    if not (sigma0_par > 0 and Z > 0):
        raise ValueError("sigma0_par and Z must be > 0")
    c92p, c92q, c5p, c5q = conductor_dielectric_coeffs(n_perp)
    u = sigma0_par * Z
    ru = math.sqrt(u)
    return ExpansionResult(0.5 * (1.0 - c92p / ru + c5p / u),
                           0.5 * (1.0 - c92q / ru + c5q / u), 3, "retarded")


def plasma_dielectric_c5(n_perp: float) -> tuple[float, float]:
    """(C_par_5, C_perp_5) for the undamped conductor / dielectric pair:

        C_par_5  = 1 + 1/(2n(n+1))
        C_perp_5 = (2n^3 + 4n^2 + 6n + 3)/(5n(n+1)^2)

    Reduce to (5/4, 3/4) at n = 1.
    """
    n = n_perp
    if not (n >= 1):
        raise ValueError("n_perp must be >= 1")
    c5_par = 1.0 + 1.0 / (2.0 * n * (n + 1.0))
    c5_perp = (2.0 * n**3 + 4.0 * n * n + 6.0 * n + 3.0) / (5.0 * n * (n + 1.0) ** 2)
    return c5_par, c5_perp


def ret_F_plasma_dielectric_hs(omega_p_par: float, n_perp: float, Z: float) -> ExpansionResult:
    """Retarded F pair for undamped conductor (par) / dielectric (perp):
    F = 1/2 (1 - C_5/(Z wp)) with `plasma_dielectric_c5` coefficients."""
    if not (omega_p_par > 0 and Z > 0):
        raise ValueError("omega_p_par and Z must be > 0")
    c5p, c5q = plasma_dielectric_c5(n_perp)
    u = Z * omega_p_par
    return ExpansionResult(0.5 * (1.0 - c5p / u), 0.5 * (1.0 - c5q / u), 2, "retarded")


def nr_F_plasma(omega_p_tilde: float, z_omega: float) -> ExpansionResult:
    """Nonretarded F pair of the plasma/vacuum half-space, leading order.

        F_par  ~ zw [pi/8 + 1/(2 wp) - pi/(4 wp^2) + A/(2 wp^2)]
        F_perp ~ zw [pi/4 + 1/wp   - pi/(2 wp^2) + A/wp^2]

    with A = sqrt(1-wp^2) arccot(wp/sqrt(1-wp^2)) continued across wp = 1
    (`arccot_cont`).  Approaches the perfect-reflector constants pi/8 and
    pi/4 as wp -> inf and vanishes in the vacuum limit wp -> 0.
    """
    if not (omega_p_tilde > 0 and z_omega > 0):
        raise ValueError("omega_p_tilde and z_omega must be > 0")
    wp = omega_p_tilde
    A = arccot_cont(wp)
    bracket = math.pi / 8.0 + 0.5 / wp - math.pi / (4.0 * wp * wp) + A / (2.0 * wp * wp)
    return ExpansionResult(z_omega * bracket, 2.0 * z_omega * bracket, 4, "nonretarded")


def ret_F_plasma(omega_p_tilde: float, z_omega: float) -> ExpansionResult:
    """Retarded F pair of the plasma/vacuum half-space, four-term series:

        F_par  ~ 1/2 - (5/(4wp))/zw + ((5-2wp^2)/(2wp^2))/zw^2
                 + ((162wp^2-105)/(32wp^3))/zw^3
        F_perp ~ 1/2 - (3/(4wp))/zw + ((2-wp^2)/(2wp^2))/zw^2
                 + ((30wp^2-15)/(16wp^3))/zw^3
    """
    if not (omega_p_tilde > 0 and z_omega > 0):
        raise ValueError("omega_p_tilde and z_omega must be > 0")
    wp = omega_p_tilde
    zw = z_omega
    f_par = (0.5 - (5.0 / (4.0 * wp)) / zw
             + ((5.0 - 2.0 * wp * wp) / (2.0 * wp * wp)) / zw**2
             + ((162.0 * wp * wp - 105.0) / (32.0 * wp**3)) / zw**3)
    f_perp = (0.5 - (3.0 / (4.0 * wp)) / zw
              + ((2.0 - wp * wp) / (2.0 * wp * wp)) / zw**2
              + ((30.0 * wp * wp - 15.0) / (16.0 * wp**3)) / zw**3)
    return ExpansionResult(f_par, f_perp, 4, "retarded")


def ret_F_slab_conductor(L_sigma0: float) -> ExpansionResult:
    """Retarded F pair of the lossy-conductor slab as functions of u = L*sigma0:

        F_par  ~ 1/8 + 3 [1/(2u^2) - 1/(8u) + (u/16) ln(1 + 2/u)
                          - (1/u^3) ln(1 + u/2)]
        F_perp ~ (3/8) u [(u-1)/2 + (1 - u^2/4) ln(1 + 2/u)]

    Both tend to the perfect-reflector 1/2 as u -> inf and to 0 as u -> 0.
    """
    if not (L_sigma0 > 0):
        raise ValueError("L_sigma0 must be > 0")
    u = L_sigma0
    log_a = math.log1p(2.0 / u)
    if u < 1e-3:
        # the 1/(2u^2) and ln(1+u/2)/u^3 terms cancel to O(u); expanded form
        f_par = (3.0 * u / 16.0) * log_a + 3.0 * u / 64.0 - 3.0 * u * u / 160.0 + u**3 / 128.0
    else:
        log_b = math.log1p(u / 2.0)
        f_par = 0.125 + 3.0 * (0.5 / (u * u) - 0.125 / u + (u / 16.0) * log_a
                               - log_b / u**3)
    f_perp = 0.375 * u * ((u - 1.0) / 2.0 + (1.0 - u * u / 4.0) * log_a)
    return ExpansionResult(f_par, f_perp, 1, "retarded")


def ret_F_slab_dielectric(eps_par0: float, eps_perp0: float, L_over_Z: float) -> ExpansionResult:
    """Leading retarded F pair of a dielectric slab:

        F_par  ~ (L/Z) [(9/20) e_par(0) - 1/(4 e_perp(0)) - 1/5]
        F_perp ~ (L/Z) [(1/2) e_par(0) - (2/5)/e_perp(0) - 1/10]

    Both vanish identically for eps_par(0) = eps_perp(0) = 1.
    """
    if not (eps_par0 >= 1 and eps_perp0 >= 1):
        raise ValueError("static permittivities must be >= 1")
    if not (L_over_Z > 0):
        raise ValueError("L_over_Z must be > 0")
    f_par = L_over_Z * (0.45 * eps_par0 - 0.25 / eps_perp0 - 0.2)
    f_perp = L_over_Z * (0.5 * eps_par0 - 0.4 / eps_perp0 - 0.1)
    return ExpansionResult(f_par, f_perp, 1, "retarded")


# ---------------------------------------------------------------------------
# excited-state residues, closed forms (half-space)

def _sqrt_pair_real(m: Material, omega_abs: float) -> complex:
    return sqrt_upper(eval_real_axis(m.par, omega_abs)) * sqrt_upper(eval_real_axis(m.perp, omega_abs))


def excited_nr_hs(t: Transition, m: Material, Z: float) -> tuple[float, float]:
    """Nonretarded residue shift and decay change of a downward transition:

        dE*    = -(1/32 pi Z^3) (|e_par e_perp| - 1)/|sqrt(e_par e_perp)+1|^2 W
        dGamma = +(1/8 pi Z^3) Im[sqrt(e_par e_perp)]/|sqrt(...)+1|^2 W

    with W = mu_par^2 + 2 mu_perp^2 and eps at the real frequency |w_mi|.
    Both scale as Z^-3; the decay change vanishes for lossless media.
    """
    if t.omega_mi >= 0:
        raise ValueError("residue terms exist only for downward transitions")
    if not (Z > 0):
        raise ValueError("Z must be > 0")
    sp = _sqrt_pair_real(m, abs(t.omega_mi))
    weight = t.mu_par_sq + 2.0 * t.mu_perp_sq
    den = abs(sp + 1.0) ** 2
    dE = -(abs(sp) ** 2 - 1.0) / den * weight / (32.0 * math.pi * Z**3)
    dG = sp.imag / den * weight / (8.0 * math.pi * Z**3)
    return dE, dG


def excited_ret_hs(t: Transition, m: Material, Z: float) -> tuple[float, float]:
    """Retarded residue shift and decay change of a downward transition.

    Oscillatory in 2|w|Z with weights |n_par|^2 - 1 and 2 Im(n_par), where
    n_par = sqrt(e_par(|w|)); independent of the perpendicular response to
    this order.
    """
    if t.omega_mi >= 0:
        raise ValueError("residue terms exist only for downward transitions")
    if not (Z > 0):
        raise ValueError("Z must be > 0")
    s = abs(t.omega_mi)
    n_par = sqrt_upper(eval_real_axis(m.par, s))
    A = abs(n_par) ** 2 - 1.0
    B = 2.0 * n_par.imag
    den = abs(n_par + 1.0) ** 2
    arg = 2.0 * s * Z
    c, si = math.cos(arg), math.sin(arg)
    p = t.mu_par_sq / arg
    q = 2.0 * t.mu_perp_sq / (arg * arg)
    pref = s**3 / (4.0 * math.pi * den)
    dE = pref * ((A * c - B * si) * p - (A * si + B * c) * q)
    dG = -2.0 * pref * ((A * si + B * c) * p + (A * c - B * si) * q)
    return dE, dG
