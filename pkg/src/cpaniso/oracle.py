"""Independent brute-force reference paths for cross-validation.

Everything in this module recomputes its physics from scratch - permittivity,
reflection coefficients, integration - sharing no integrand code with the
main `fresnel`/`shifts` path.  The integrators are deliberately primitive:
dense fixed grids with composite trapezoid sums, second-order convergent,
used to pin expected values for the example-based tests and to back the
`validate` CLI subcommand.  They may be orders of magnitude slower than the
main path; that is fine.

The committed pinned-values table (data/pinned_values.txt) is produced by
`generate_pinned_values`; each row records the oracle value, the main-path
value at generation time, their difference and the grid used.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .materials import AxisResponse, Material
from .shifts import Geometry, Transition

__all__ = ["OracleReport", "brute_F", "isotropic_reference", "contour_reference",
           "make_report", "generate_pinned_values", "load_pinned_values",
           "PINNED_PATH"]

PINNED_PATH = Path(__file__).parent / "data" / "pinned_values.txt"


@dataclass(frozen=True)
class OracleReport:
    quantity_label: str
    oracle_value: complex
    main_value: complex
    abs_diff: float
    rel_diff: float
    grid_size: int

    def row(self) -> str:
        return (f"{self.quantity_label}  oracle={_fmt(self.oracle_value)}  "
                f"main={_fmt(self.main_value)}  abs={self.abs_diff:.3e}  "
                f"rel={self.rel_diff:.3e}  grid={self.grid_size}")


def _fmt(v) -> str:
    if isinstance(v, complex):
        return f"{v.real:.12e}{v.imag:+.12e}j"
    return f"{v:.12e}"


def make_report(label: str, oracle_value, main_value, grid: int) -> OracleReport:
    a = abs(oracle_value - main_value)
    scale = max(abs(oracle_value), abs(main_value))
    return OracleReport(label, oracle_value, main_value, a,
                        a / scale if scale > 0 else 0.0, grid)


# ---------------------------------------------------------------------------
# inline physics (independent of the fresnel/materials evaluation code)

def _eps_grid(r: AxisResponse, xi: np.ndarray) -> np.ndarray:
    """eps(i*xi) on a grid; inf where a conductor diverges (xi = 0)."""
    if r.kind == "vacuum":
        return np.ones_like(xi)
    if r.kind == "dielectric":
        return np.full_like(xi, r.n**2)
    den = xi**2 + r.omega_t**2 + 2.0 * r.gamma * xi
    with np.errstate(divide="ignore"):
        return 1.0 + np.where(den > 0.0, r.omega_p**2 / np.where(den > 0, den, 1.0),
                              np.inf if r.omega_p > 0 else 0.0)


def _tilde_coeffs(m: Material, X: np.ndarray, Y: np.ndarray):
    """Polar-variable interface coefficients on a meshgrid, limits inline."""
    xi = X * Y
    ep = _eps_grid(m.par, xi)
    et = _eps_grid(m.perp, xi)
    # y^2 (eps - 1): rewrite the conductor cases so y = 0 is the limit value
    B_par = _b_grid(m.par, X, Y)
    B_perp = _b_grid(m.perp, X, Y)
    s_te = np.sqrt(1.0 + B_par)
    r_te = (1.0 - s_te) / (1.0 + s_te)
    prod = ep * et
    s_tm = np.sqrt(1.0 + B_perp)
    with np.errstate(invalid="ignore"):
        r_tm = (np.sqrt(prod) - s_tm) / (np.sqrt(prod) + s_tm)
    r_tm = np.where(np.isinf(prod), 1.0, r_tm)
    return r_te, r_tm, s_te, ep, et, B_perp


def _b_grid(r: AxisResponse, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    if r.kind == "vacuum":
        return np.zeros_like(X * Y)
    if r.kind == "dielectric":
        return (r.n**2 - 1.0) * Y**2 * np.ones_like(X)
    if r.kind == "lossless_plasma":
        return (r.omega_p / X) ** 2 * np.ones_like(Y)
    num = r.omega_p**2 * Y * np.ones_like(X)
    den = X**2 * Y + 2.0 * r.gamma * X
    if r.omega_t > 0:
        den = den + r.omega_t**2 * np.where(Y > 0, 1.0 / np.where(Y > 0, Y, 1.0), np.inf)
    return num / np.where(den > 0, den, 1.0)


def _grids(z_omega: float, n_grid: int):
    x_max = 30.0 / z_omega + 30.0
    x = np.geomspace(1e-8 * x_max, x_max, 2 * n_grid)
    y = np.linspace(0.0, 1.0, n_grid)
    return x, y


def brute_F(m: Material, g: Geometry, z_omega: float, n_grid: int = 2000):
    """(F_par, F_perp) by composite trapezoid on a fixed log-x/uniform-y grid.

    Material in transition-frequency units, like the main F functions.
    Second-order convergent in the grid spacing; double the grid for a
    Richardson error estimate.  Processes the x grid in row blocks to keep
    memory flat on large grids.
    """
    if n_grid < 10:
        raise ValueError("n_grid too small")
    x, y = _grids(z_omega, n_grid)
    Y = y[None, :]
    g_par = np.empty_like(x)
    g_perp = np.empty_like(x)
    for lo in range(0, x.size, 512):
        X = x[lo:lo + 512, None]
        r_te, r_tm, s_te, ep, et, B_perp = _tilde_coeffs(m, X, Y)
        if g.kind == "slab":
            kzd_te = X * s_te
            with np.errstate(invalid="ignore", over="ignore"):
                ratio = np.sqrt(ep / et)
            ratio = np.where(np.isnan(ratio), _ratio_limit(m), ratio)
            kzd_tm = X * ratio * np.sqrt(1.0 + B_perp)
            e_te = np.exp(-2.0 * kzd_te * g.L)
            e_tm = np.exp(-2.0 * kzd_tm * g.L)
            r_te = r_te * (1.0 - e_te) / (1.0 - r_te**2 * e_te)
            num = r_tm * (1.0 - e_tm)
            den = 1.0 - r_tm**2 * e_tm
            r_tm = np.where(den > 0, num / np.where(den > 0, den, 1.0), 1.0)
        kern = np.exp(-2.0 * z_omega * X) * X**3 / (1.0 + (X * Y) ** 2)
        g_par[lo:lo + 512] = np.trapezoid(kern * (r_tm - Y**2 * r_te), y, axis=1)
        g_perp[lo:lo + 512] = np.trapezoid(kern * 2.0 * (1.0 - Y**2) * r_tm, y, axis=1)
    return z_omega**4 * np.trapezoid(g_par, x), z_omega**4 * np.trapezoid(g_perp, x)


def _ratio_limit(m: Material) -> float:
    """sqrt(eps_par/eps_perp) as xi -> 0, by divergence order of each axis."""
    def order_coef(r: AxisResponse):
        if r.kind == "lossless_plasma" and r.omega_p > 0:
            return 2, r.omega_p**2
        if r.kind == "drude_conductor" and r.omega_p > 0:
            return 1, r.omega_p**2 / (2 * r.gamma)
        if r.kind == "dielectric":
            return 0, r.n**2
        if r.kind == "drude_lorentz" and r.omega_t > 0:
            return 0, 1 + (r.omega_p / r.omega_t) ** 2
        return 0, 1.0
    p1, c1 = order_coef(m.par)
    p2, c2 = order_coef(m.perp)
    if p1 > p2:
        return math.inf
    if p1 < p2:
        return 0.0
    return math.sqrt(c1 / c2)


def isotropic_reference(eps_model: AxisResponse, z_omega: float,
                        geometry: Geometry, n_grid: int = 2000):
    """(F_par, F_perp) for an isotropic medium from the textbook formulas.

    r_te = (1 - s)/(1 + s), r_tm = (eps - s)/(eps + s) with
    s = sqrt(y^2(eps - 1) + 1); written without the anisotropic
    sqrt(eps_par*eps_perp) construction, as a separate check path.
    """
    x, y = _grids(z_omega, n_grid)
    Y = y[None, :]
    g_par = np.empty_like(x)
    g_perp = np.empty_like(x)
    for lo in range(0, x.size, 512):
        X = x[lo:lo + 512, None]
        eps = _eps_grid(eps_model, X * Y)
        B = _b_grid(eps_model, X, Y)
        s = np.sqrt(1.0 + B)
        r_te = (1.0 - s) / (1.0 + s)
        with np.errstate(invalid="ignore"):
            r_tm = (eps - s) / (eps + s)
        r_tm = np.where(np.isinf(eps), 1.0, r_tm)
        if geometry.kind == "slab":
            kzd = X * s
            e = np.exp(-2.0 * kzd * geometry.L)
            r_te = r_te * (1.0 - e) / (1.0 - r_te**2 * e)
            r_tm = r_tm * (1.0 - e) / (1.0 - r_tm**2 * e)
        kern = np.exp(-2.0 * z_omega * X) * X**3 / (1.0 + (X * Y) ** 2)
        g_par[lo:lo + 512] = np.trapezoid(kern * (r_tm - Y**2 * r_te), y, axis=1)
        g_perp[lo:lo + 512] = np.trapezoid(kern * 2.0 * (1.0 - Y**2) * r_tm, y, axis=1)
    return z_omega**4 * np.trapezoid(g_par, x), z_omega**4 * np.trapezoid(g_perp, x)


def _eps_real(r: AxisResponse, w: float) -> complex:
    if r.kind == "vacuum":
        return 1.0 + 0.0j
    if r.kind == "dielectric":
        return complex(r.n**2)
    return 1.0 + r.omega_p**2 / (r.omega_t**2 - w * w - 2j * r.gamma * w)


def _root_up(z: complex) -> complex:
    w = np.sqrt(complex(z))
    return -w if w.imag < 0 else w


def contour_reference(t: Transition, m: Material, Z: float, n_grid: int = 20000) -> complex:
    """Residue shift dE* of one downward transition by fixed-grid trapezoid.

    Both contour legs on dense uniform grids with inline kappa-variable
    coefficients; the imaginary leg is truncated where the exp(-2|w|Z t)
    damping reaches ~1e-18.
    """
    if t.omega_mi >= 0:
        raise ValueError("downward transitions only")
    s = abs(t.omega_mi)
    ep = _eps_real(m.par, s)
    et = _eps_real(m.perp, s)
    sp = _root_up(ep) * _root_up(et)

    def integrand(kap: np.ndarray) -> np.ndarray:
        root_te = np.array([_root_up(ep - 1.0 + k * k) for k in kap])
        root_tm = np.array([_root_up(et - 1.0 + k * k) for k in kap])
        with np.errstate(invalid="ignore"):
            r_te = (kap - root_te) / (kap + root_te)
            r_tm = (sp * kap - root_tm) / (sp * kap + root_tm)
        # the contour corner kappa = 0 is 0/0 for unit permittivity; its
        # limit from either side is zero reflection
        r_te = np.where(np.isnan(r_te), 0.0, r_te)
        r_tm = np.where(np.isnan(r_tm), 0.0, r_tm)
        return np.exp(2j * s * Z * kap) * (
            (r_te - kap**2 * r_tm) * t.mu_par_sq
            + 2.0 * (1.0 - kap**2) * r_tm * t.mu_perp_sq)

    k_real = np.linspace(0.0, 1.0, n_grid).astype(complex)
    leg1 = -np.trapezoid(integrand(k_real), k_real.real)
    t_max = 41.0 / (2.0 * s * Z)
    ts = np.linspace(0.0, t_max, 2 * n_grid)
    leg2 = 1j * np.trapezoid(integrand(1j * ts), ts)
    return complex(1j * s**3 / (8.0 * math.pi) * (leg1 + leg2))


# ---------------------------------------------------------------------------
# pinned-values table

def _pinned_cases():
    """(label, oracle callable, main callable, grid) rows of the table."""
    from . import shifts
    from .materials import dielectric, drude_conductor, lossless_plasma, vacuum

    plasma29 = Material(lossless_plasma(0.29), vacuum())
    aniso = Material(drude_conductor(1.0, 0.5), dielectric(1.5))
    slab_mat = Material(drude_conductor(1.0, 0.5), vacuum())
    iso_cond = Material(drude_conductor(1.0, 0.1), drude_conductor(1.0, 0.1))
    n2 = dielectric(2.0)
    iso_n2 = Material(n2, n2)
    hs = Geometry.half_space()

    def F_main(m, g, zw):
        if g.kind == "slab":
            return shifts.F_slab(m, g.L, zw)
        return shifts.F_halfspace(m, zw)

    cases = []
    for label, mt, geo, zw in [
        ("F_halfspace plasma(0.29)/vac zw=10", plasma29, hs, 10.0),
        ("F_halfspace drude(1,0.5)/diel(1.5) zw=1", aniso, hs, 1.0),
        ("F_halfspace drude-iso(1,0.1) zw=0.1", iso_cond, hs, 0.1),
        ("F_slab drude(1,0.5)/vac L=1 zw=30", slab_mat, Geometry.slab(1.0), 30.0),
        ("F_slab drude(1,0.5)/diel(1.5) L=0.5 zw=1", Material(drude_conductor(1.0, 0.5), dielectric(1.5)), Geometry.slab(0.5), 1.0),
    ]:
        for comp in (0, 1):
            cases.append((
                f"{label} [{'par' if comp == 0 else 'perp'}]",
                lambda n, mt=mt, geo=geo, zw=zw, comp=comp: brute_F(mt, geo, zw, n)[comp],
                lambda mt=mt, geo=geo, zw=zw, comp=comp: F_main(mt, geo, zw)[comp],
                4000,
            ))

    cases.append((
        "isotropic_reference diel(2) hs zw=1 [par]",
        lambda n: isotropic_reference(n2, 1.0, hs, n)[0],
        lambda: shifts.F_halfspace(iso_n2, 1.0)[0],
        4000,
    ))
    cases.append((
        "isotropic_reference diel(2) hs zw=1 [perp]",
        lambda n: isotropic_reference(n2, 1.0, hs, n)[1],
        lambda: shifts.F_halfspace(iso_n2, 1.0)[1],
        4000,
    ))

    tr = Transition(-1.0, 1.0, 1.0)
    for Zv in (0.02, 0.05, 0.5, 1.0, 5.0):
        cases.append((
            f"contour drude-iso(1,0.1) Z={Zv}",
            lambda n, Zv=Zv: contour_reference(tr, iso_cond, Zv, n),
            lambda Zv=Zv: shifts.excited_residue(tr, iso_cond, Zv),
            40000,
        ))
    return cases


def generate_pinned_values(path: Path = PINNED_PATH) -> list[OracleReport]:
    """Recompute every pinned row and rewrite the committed table."""
    reports = []
    for label, oracle_fn, main_fn, grid in _pinned_cases():
        ov = oracle_fn(grid)
        mv = main_fn()
        reports.append(make_report(label, ov, mv, grid))
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = ["# pinned oracle values: label | oracle | main-at-generation | abs | rel | grid"]
    for r in reports:
        lines.append(f"{r.quantity_label} | {_fmt(r.oracle_value)} | {_fmt(r.main_value)} | "
                     f"{r.abs_diff:.3e} | {r.rel_diff:.3e} | {r.grid_size}")
    path.write_text("\n".join(lines) + "\n")
    return reports


def load_pinned_values(path: Path = PINNED_PATH) -> list[tuple[str, complex, complex, float, float, int]]:
    rows = []
    for line in path.read_text().splitlines():
        if not line or line.startswith("#"):
            continue
        label, ov, mv, ad, rd, grid = [p.strip() for p in line.split("|")]
        rows.append((label, complex(ov), complex(mv), float(ad), float(rd), int(grid)))
    return rows
