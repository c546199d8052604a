"""Special functions and branch-safe complex helpers.

Three numeric kernels used throughout the reflection-coefficient and
expansion formulas:

* `sqrt_upper`   - square root with Im >= 0 (the radiation/decay branch)
* `hyp2f1`       - Gauss hypergeometric function on the real arguments the
                   expansion coefficients need (z <= 0.999)
* `arctan_cont`  - the real-analytic continuation of
                   sqrt(1-w^2)*[atan(s/sqrt(1-w^2)) - atan(w/sqrt(1-w^2))]
                   across w = 1, where the arctans turn into arctanhs

All are stateless and thread-safe.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

__all__ = ["sqrt_upper", "hyp2f1", "arctan_cont", "arccot_cont"]


def sqrt_upper(z) -> complex:
    """Square root w of z with Im(w) >= 0; non-negative real root for z >= 0.

    This is the branch on which normal wave-vector components describe
    outgoing or decaying waves.  Accepts any finite complex scalar.
    """
    w = cmath.sqrt(complex(z))
    if w.imag < 0.0:
        w = -w
    return w


def sqrt_upper_arr(z: np.ndarray) -> np.ndarray:
    """Vectorized `sqrt_upper` over an ndarray."""
    w = np.sqrt(np.asarray(z, dtype=complex))
    return np.where(w.imag < 0.0, -w, w)


_MAX_TERMS = 200_000


def _series_2f1(a: float, b: float, c: float, z: float) -> float:
    total = 1.0
    term = 1.0
    for k in range(_MAX_TERMS):
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z
        total += term
        if abs(term) <= 1e-17 * max(1.0, abs(total)):
            return total
    raise ArithmeticError("2F1 series did not converge")


def hyp2f1(a: float, b: float, c: float, z: float) -> float:
    """Gauss hypergeometric 2F1(a, b; c; z) for real parameters, z <= 0.999.

    Power series for |z| <= 0.5; for z < -0.5 the Pfaff transformation
    z -> z/(z-1) maps the argument into (0, 1) where the series converges.
    Covers the arguments z = 1 - n^2 <= 0 needed by the retarded-expansion
    coefficients, to about 1e-12 absolute.
    """
    for name, v in (("a", a), ("b", b), ("c", c), ("z", z)):
        if not math.isfinite(v):
            raise ValueError(f"{name} must be finite")
    if c <= 0 and c == int(c):
        raise ValueError("c must not be a non-positive integer")
    if z > 0.999:
        raise ValueError("z > 0.999 not supported")
    if z == 0.0:
        return 1.0
    if z >= -0.5:
        return _series_2f1(a, b, c, z)
    # Pfaff: 2F1(a,b;c;z) = (1-z)^(-a) 2F1(a, c-b; c; z/(z-1))
    w = z / (z - 1.0)
    return (1.0 - z) ** (-a) * _series_2f1(a, c - b, c, w)


def arctan_cont(omega_tilde: float, s: float) -> float:
    """Real continuation of sqrt(1-w^2)*[atan(s/sqrt(1-w^2)) - atan(w/sqrt(1-w^2))].

    The expression is even in the square root, hence a single-valued
    function of W = 1 - w^2.  With g = (s - w)/(W + s*w) it equals
    sqrt(W)*atan(sqrt(W)*g) for W > 0 and -sqrt(-W)*atanh(sqrt(-W)*g) for
    W < 0 (this is where atan(iz) = i*atanh(z) enters); near W = 0 the
    series W*g*(1 - W*g^2/3 + ...) keeps it smooth.  Continuous across
    w = 1 and zero there.
    """
    w = omega_tilde
    if not (w > 0):
        raise ValueError("omega_tilde must be > 0")
    if s < w:
        raise ValueError("s must be >= omega_tilde")
    W = (1.0 - w) * (1.0 + w)
    g = (s - w) / (W + s * w)
    u = W * g * g
    if abs(u) < 1e-6:
        # |u| small: 4-term alternating series, error < |u|^4/9 ~ 1e-25
        return W * g * (1.0 - u / 3.0 + u * u / 5.0 - u**3 / 7.0)
    if W > 0.0:
        r = math.sqrt(W)
        return r * math.atan(r * g)
    # w > 1: -r*atanh(r*g) written without the 1 - r*g cancellation,
    # atanh(r*g) = (1/2) ln([1 + (w+r)(s-w)] (w+r)/(s+r))
    r = math.sqrt(-W)
    return -0.5 * r * math.log((1.0 + (w + r) * (s - w)) * (w + r) / (s + r))


def arccot_cont(omega_tilde: float) -> float:
    """Real continuation of sqrt(1-w^2)*arccot(w/sqrt(1-w^2)) across w = 1.

    The s -> infinity limit of `arctan_cont` (principal arccot, range
    (0, pi)); appears in the nonretarded plasma expansion brackets.
    """
    w = omega_tilde
    if not (w > 0):
        raise ValueError("omega_tilde must be > 0")
    W = (1.0 - w) * (1.0 + w)
    g = 1.0 / w
    u = W * g * g
    if abs(u) < 1e-6:
        return W * g * (1.0 - u / 3.0 + u * u / 5.0 - u**3 / 7.0)
    if W > 0.0:
        r = math.sqrt(W)
        return r * math.atan(r / w)
    # w > 1: atanh(r/w) collapses to ln(w + r), stable for any size of w
    r = math.sqrt(-W)
    return -r * math.log(w + r)
