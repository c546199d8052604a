"""Exact (quadrature) energy shifts and decay-rate changes.

The distance-resolved shift of a state with transitions m is

    dE = -1/(8 pi^2 Z^4) * sum_m sgn(w_mi)/|w_mi| *
         [F_par(Z|w_mi|) |mu_par|^2 + F_perp(Z|w_mi|) |mu_perp|^2]

with the dimensionless coefficients

    F_par  = (zw)^4 int_0^inf dx x^3 int_0^1 dy
             (r_tm - y^2 r_te)/(1 + x^2 y^2) exp(-2 zw x)
    F_perp = (zw)^4 int_0^inf dx x^3 int_0^1 dy
             2 (1 - y^2) r_tm/(1 + x^2 y^2) exp(-2 zw x)

where zw = Z*|w_mi| and the reflection coefficients are the polar-variable
half-space or slab set from `fresnel`.  Excited states acquire an extra
residue term from the bent-contour integral (`excited_residue`) whose
imaginary part carries the change in spontaneous decay rate,
dGamma = -2 Im(dE_residue).

Everything here evaluates the material at frequencies measured in units of
the transition frequency: the F_* functions take a material whose
parameters are already expressed in those units (omega_mg = 1), and the
shift assemblers rescale a reference-unit material per transition via
`Material.scaled`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .fresnel import halfspace_kappa, halfspace_xy, slab_xy, _sqrt_pair_product, _sqrt_pair_ratio
from .materials import Material
from .quadrature import QuadSpec, integrate_decaying, integrate_kappa_contour, integrate_unit
from .specfun import arctan_cont

__all__ = [
    "Transition", "AtomSpec", "Geometry", "TransitionShift", "ShiftResult",
    "F_halfspace", "F_slab", "F_plasma_closed", "ground_shift",
    "ground_shift_nonret", "excited_residue", "excited_total",
    "image_factor_integral",
]

Z_OMEGA_WARN = 1e-4    # below this, results carry a regime warning


@dataclass(frozen=True)
class Transition:
    """One dipole transition: signed frequency and squared dipole components.

    omega_mi > 0 when the partner state lies above the state whose shift is
    computed (upward transition, the only kind a ground state has).
    """

    omega_mi: float
    mu_par_sq: float
    mu_perp_sq: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.omega_mi) or self.omega_mi == 0.0:
            raise ValueError("omega_mi must be finite and nonzero")
        if self.mu_par_sq < 0 or self.mu_perp_sq < 0:
            raise ValueError("dipole squares must be >= 0")


@dataclass(frozen=True)
class AtomSpec:
    transitions: tuple[Transition, ...]
    state_label: str = ""

    def __post_init__(self) -> None:
        if not self.transitions:
            raise ValueError("need at least one transition")
        object.__setattr__(self, "transitions", tuple(self.transitions))


@dataclass(frozen=True)
class Geometry:
    """Half-space or slab of dimensionless thickness L (units 1/omega_ref)."""

    kind: str = "half_space"
    L: float = math.inf

    def __post_init__(self) -> None:
        if self.kind not in ("half_space", "slab"):
            raise ValueError("geometry kind must be 'half_space' or 'slab'")
        if self.kind == "slab" and not (self.L > 0 and math.isfinite(self.L)):
            raise ValueError("slab requires finite L > 0")

    @classmethod
    def half_space(cls) -> "Geometry":
        return cls("half_space")

    @classmethod
    def slab(cls, L: float) -> "Geometry":
        return cls("slab", L)


@dataclass(frozen=True)
class TransitionShift:
    omega_mi: float
    F_par: float
    F_perp: float
    delta_E: float
    delta_E_residue: complex
    error_estimate: float


@dataclass(frozen=True)
class ShiftResult:
    """Assembled shift: totals plus the per-transition breakdown.

    F_par/F_perp are the dipole-weighted means of the per-transition
    coefficients (identical to the single values for one-transition atoms);
    delta_Gamma = -2 Im(delta_E_residue) by construction.
    """

    F_par: float
    F_perp: float
    delta_E: float
    delta_E_residue: complex
    delta_Gamma: float
    per_transition: tuple[TransitionShift, ...]
    error_estimate: float
    warnings: tuple[str, ...] = field(default=())


# ---------------------------------------------------------------------------
# dimensionless F coefficients

def _F_pair(coef_fn, z_omega: float, spec: QuadSpec):
    """Nested quadrature of the (F_par, F_perp) pair.

    coef_fn(x, y_nodes) returns the (r_te, r_tm) arrays of the chosen
    geometry.  Inner y tolerance is 10x tighter than the outer x tolerance;
    the inner error bound enters the total through
    int x^3 exp(-2 zw x) dx = (3/8)/zw^4.
    """
    inner_spec = spec.tighter(10.0)
    inner_err = 0.0
    inner_ok = True

    def outer(xs: np.ndarray) -> np.ndarray:
        nonlocal inner_err, inner_ok
        rows = np.empty((xs.size, 2))
        for i, x in enumerate(xs):
            def inner(ys: np.ndarray) -> np.ndarray:
                r_te, r_tm = coef_fn(x, ys)
                pref = 1.0 / (1.0 + (x * ys) ** 2)
                return np.stack(((r_tm - ys * ys * r_te) * pref,
                                 2.0 * (1.0 - ys * ys) * r_tm * pref), axis=-1)

            res = integrate_unit(inner, inner_spec)
            inner_err = max(inner_err, res.error_estimate)
            inner_ok = inner_ok and res.converged
            rows[i] = (x**3) * math.exp(-2.0 * z_omega * x) * np.asarray(res.value)
        return rows

    out = integrate_decaying(outer, 0.5 / z_omega, spec)
    F = z_omega**4 * np.asarray(out.value)
    err = z_omega**4 * out.error_estimate + 0.375 * inner_err
    return float(F[0]), float(F[1]), err, out.converged and inner_ok


def F_halfspace(m: Material, z_omega: float, spec: QuadSpec = QuadSpec()):
    """Dimensionless (F_par, F_perp) of the half-space at zw = Z*omega_mg.

    The material is taken in transition-frequency units (omega_mg = 1).
    Both coefficients are >= 0 for passive media.
    """
    if not (z_omega > 0):
        raise ValueError("z_omega must be > 0")
    fp, fq, _, _ = _F_pair(lambda x, ys: halfspace_xy(m, 1.0, x, ys), z_omega, spec)
    return fp, fq


def F_slab(m: Material, L: float, z_omega: float, spec: QuadSpec = QuadSpec()):
    """Dimensionless (F_par, F_perp) of a slab of thickness L*omega_mg."""
    if not (z_omega > 0):
        raise ValueError("z_omega must be > 0")
    fp, fq, _, _ = _F_pair(lambda x, ys: slab_xy(m, L, 1.0, x, ys), z_omega, spec)
    return fp, fq


def _plasma_closed_integrands(wp: float, xs: np.ndarray) -> np.ndarray:
    """Integrands of the sigma_perp = 0 closed-form pair, before exp damping.

    Elementary-function expressions obtained after the analytic y
    integration; valid for every wp > 0 through `arctan_cont` (the
    sqrt(1 - wp^2) terms continue across wp = 1).
    """
    out = np.empty((xs.size, 2))
    wp2 = wp * wp
    for i, x in enumerate(xs):
        R = math.hypot(wp, x)
        at = math.atan(x)
        cont = arctan_cont(wp, R)
        h_par = ((x * x - 1.0) * at + x
                 + (2.0 * x / wp2) * (2.0 * x - R) * (x - at)
                 - (2.0 * x * x / wp2) * (R - wp - cont))
        h_perp = (2.0 * x**3 / 3.0
                  + ((x * x + wp2) ** 1.5 - wp**3) / 3.0
                  + (x * x + 1.0) * cont
                  - (x * x + 1.0) * (R - wp)
                  + (wp2 / 2.0 - 1.0) * ((x * x + 1.0) * at - x))
        out[i] = (h_par, (4.0 / wp2) * h_perp)
    return out


def F_plasma_closed(omega_p_tilde: float, z_omega: float, spec: QuadSpec = QuadSpec()):
    """(F_par, F_perp) for a lossless plasma parallel axis and vacuum
    perpendicular axis, from the closed-form 1D integrals.

    Independent of the 2D quadrature path: the y integral was done
    analytically, leaving fast-converging damped 1D integrals.
    """
    if not (omega_p_tilde > 0):
        raise ValueError("omega_p_tilde must be > 0")
    if not (z_omega > 0):
        raise ValueError("z_omega must be > 0")

    def f(xs: np.ndarray) -> np.ndarray:
        damp = np.exp(-2.0 * z_omega * xs)
        return _plasma_closed_integrands(omega_p_tilde, xs) * damp[:, None]

    res = integrate_decaying(f, 0.5 / z_omega, spec)
    F = z_omega**4 * np.asarray(res.value)
    return float(F[0]), float(F[1])


# ---------------------------------------------------------------------------
# shift assembly

def _sorted_transitions(atom: AtomSpec) -> list[Transition]:
    # fixed summation order (ascending |omega|, then sign) for determinism
    return sorted(atom.transitions, key=lambda t: (abs(t.omega_mi), t.omega_mi))


def ground_shift(atom: AtomSpec, m: Material, g: Geometry, Z: float,
                 spec: QuadSpec = QuadSpec()) -> ShiftResult:
    """Imaginary-axis part of the shift (the full shift for ground states).

    Per transition: dE_m = -sgn(w_mi) [F_par mu_par^2 + F_perp mu_perp^2]
    / (8 pi^2 Z^4 |w_mi|), with the F pair evaluated at zw = Z|w_mi| for
    the material rescaled into units of |w_mi|.  Sums over transitions in
    ascending |w_mi|; for ground states (all w_mi > 0) the result is <= 0.
    """
    if not (Z > 0):
        raise ValueError("Z must be > 0")
    warnings: list[str] = []
    per: list[TransitionShift] = []
    total = 0.0
    worst_err = 0.0
    for t in _sorted_transitions(atom):
        s = abs(t.omega_mi)
        zw = Z * s
        if zw < Z_OMEGA_WARN:
            warnings.append(f"z_omega={zw:.3e} below {Z_OMEGA_WARN:g}: "
                            "formula valid but outside the physical regime")
        ms = m.scaled(1.0 / s)
        if g.kind == "half_space":
            coef = lambda x, ys, _ms=ms: halfspace_xy(_ms, 1.0, x, ys)
        else:
            L_t = g.L * s
            coef = lambda x, ys, _ms=ms, _L=L_t: slab_xy(_ms, _L, 1.0, x, ys)
        fp, fq, err, ok = _F_pair(coef, zw, spec)
        if not ok:
            warnings.append(f"quadrature budget exhausted at omega_mi={t.omega_mi:g}")
        pref = -math.copysign(1.0, t.omega_mi) / (8.0 * math.pi**2 * Z**4 * s)
        dE = pref * (fp * t.mu_par_sq + fq * t.mu_perp_sq)
        dE_err = abs(pref) * err * (t.mu_par_sq + t.mu_perp_sq)
        per.append(TransitionShift(t.omega_mi, fp, fq, dE, 0.0 + 0.0j, dE_err))
        total += dE
        worst_err = max(worst_err, dE_err)
    return _assemble(atom, per, total, 0.0 + 0.0j, worst_err, warnings)


def _assemble(atom: AtomSpec, per, delta_E, residue, worst_err, warnings) -> ShiftResult:
    mu_par = [t.mu_par_sq for t in _sorted_transitions(atom)]
    mu_perp = [t.mu_perp_sq for t in _sorted_transitions(atom)]
    f_par = _weighted([p.F_par for p in per], mu_par)
    f_perp = _weighted([p.F_perp for p in per], mu_perp)
    return ShiftResult(
        F_par=f_par,
        F_perp=f_perp,
        delta_E=delta_E + residue.real,
        delta_E_residue=residue,
        delta_Gamma=-2.0 * residue.imag + 0.0,   # +0.0 normalizes -0.0
        per_transition=tuple(per),
        error_estimate=worst_err,
        warnings=tuple(warnings),
    )


def _weighted(values, weights) -> float:
    wsum = sum(weights)
    if wsum <= 0.0:
        return float(sum(values) / len(values))
    return float(sum(v * w for v, w in zip(values, weights)) / wsum)


def image_factor_integral(m: Material, omega_mg: float, spec: QuadSpec = QuadSpec()) -> float:
    """int_0^inf dw (w_mg/(w^2 + w_mg^2)) (sqrt(e_par e_perp) - 1)/(sqrt(...) + 1)
    with eps at i*w.

    The frequency-weighted image factor controlling the nonretarded shift;
    equals pi/2 in the perfect-reflector limit.  Evaluated on [0, pi/2]
    after w = w_mg*tan(theta), where the integrand is bounded.
    """

    def f(us: np.ndarray) -> np.ndarray:
        theta = 0.5 * math.pi * us
        w = omega_mg * np.tan(theta)
        sp = _sqrt_pair_product(m, w)
        return 0.5 * math.pi * (1.0 - 2.0 / (sp + 1.0))

    return float(integrate_unit(f, spec).value)


def _slab_image_fold(m: Material, k: float, L: float, w: np.ndarray) -> np.ndarray:
    """Nonretarded slab factor R(k, w): image factor folded with thickness."""
    sp = _sqrt_pair_product(m, w)
    img = 1.0 - 2.0 / (sp + 1.0)
    ratio = np.array([_sqrt_pair_ratio(m, float(x)) for x in np.atleast_1d(w)])
    expo = np.exp(-2.0 * ratio * k * L)
    return img * (1.0 - expo) / (1.0 - img * img * expo)


def ground_shift_nonret(atom: AtomSpec, m: Material, g: Geometry, Z: float,
                        spec: QuadSpec = QuadSpec()) -> float:
    """Nonretarded (electrostatic-regime) shift.

    Half-space: per transition -sgn(w_mi)(mu_par^2 + 2 mu_perp^2)/(32 pi^2 Z^3)
    times `image_factor_integral`.  Slab: the same with the k integral kept,
    -1/(8 pi^2) int dk k^2 e^{-2kZ} int dw R(k, w) w_mi/(w^2 + w_mi^2),
    where R folds the image factor with exp(-2 sqrt(e_par/e_perp) k L).
    Intended for Z|w_mi| << 1 (not enforced).
    """
    if not (Z > 0):
        raise ValueError("Z must be > 0")
    total = 0.0
    for t in _sorted_transitions(atom):
        s = abs(t.omega_mi)
        sign = math.copysign(1.0, t.omega_mi)
        weight = t.mu_par_sq + 2.0 * t.mu_perp_sq
        if g.kind == "half_space":
            I = image_factor_integral(m, s, spec)
            total += -sign * weight * I / (32.0 * math.pi**2 * Z**3)
        else:
            inner_spec = spec.tighter(10.0)

            def outer(ks: np.ndarray) -> np.ndarray:
                vals = np.empty(ks.size)
                for i, k in enumerate(ks):
                    def inner(us: np.ndarray) -> np.ndarray:
                        w = s * np.tan(0.5 * math.pi * us)
                        return 0.5 * math.pi * _slab_image_fold(m, k, g.L, w)

                    vals[i] = k * k * math.exp(-2.0 * k * Z) * float(
                        integrate_unit(inner, inner_spec).value)
                return vals

            J = float(integrate_decaying(outer, 0.5 / Z, spec).value)
            total += -sign * weight * J / (8.0 * math.pi**2)
    return total


# ---------------------------------------------------------------------------
# excited states: residue contributions on the bent contour

def excited_residue(t: Transition, m: Material, Z: float,
                    spec: QuadSpec = QuadSpec()) -> complex:
    """Residue term dE* of one downward transition near the half-space.

        dE* = (i/8 pi) |w|^3 int_C dkappa e^{2i|w|Z kappa}
              [(r_te - kappa^2 r_tm) mu_par^2 + 2 (1 - kappa^2) r_tm mu_perp^2]

    with C the bent contour 1 -> 0 -> i*inf and the coefficients of
    `halfspace_kappa` at the real frequency |w|.  The decay-rate change of
    the transition is -2 Im(dE*).
    """
    if t.omega_mi >= 0:
        raise ValueError("residue term exists only for downward transitions")
    if not (Z > 0):
        raise ValueError("Z must be > 0")
    s = abs(t.omega_mi)
    if m.is_vacuum:
        return 0.0 + 0.0j

    def f(kappa: complex) -> complex:
        r_te, r_tm = halfspace_kappa(m, s, kappa)
        k2 = kappa * kappa
        phase = np.exp(2j * s * Z * kappa)
        return phase * ((r_te - k2 * r_tm) * t.mu_par_sq
                        + 2.0 * (1.0 - k2) * r_tm * t.mu_perp_sq)

    res = integrate_kappa_contour(f, spec, decay_scale=0.5 / (s * Z))
    return complex(1j * s**3 / (8.0 * math.pi) * res.value)


def excited_total(atom: AtomSpec, m: Material, Z: float,
                  spec: QuadSpec = QuadSpec(),
                  geometry: Geometry = Geometry.half_space()) -> ShiftResult:
    """Renormalized shift of a (possibly excited) state near the half-space.

    Imaginary-axis part via the `ground_shift` machinery with signed
    frequencies, plus `excited_residue` for every downward transition.
    For atoms with only upward transitions this reduces to `ground_shift`.
    """
    if geometry.kind != "half_space":
        raise NotImplementedError("excited-state residues are available for "
                                  "the half-space geometry only")
    base = ground_shift(atom, m, geometry, Z, spec)
    residue_total = 0.0 + 0.0j
    per = []
    for t, p in zip(_sorted_transitions(atom), base.per_transition):
        if t.omega_mi < 0:
            r = excited_residue(t, m, Z, spec)
            residue_total += r
            per.append(TransitionShift(p.omega_mi, p.F_par, p.F_perp,
                                       p.delta_E + r.real, r, p.error_estimate))
        else:
            per.append(p)
    base_dE = sum(p.delta_E for p in base.per_transition)
    return _assemble(atom, per, base_dE, residue_total,
                     base.error_estimate, list(base.warnings))
