"""Exact mathematical core of Tukey's g-and-h distribution.

The distribution is the law of ``xi + omega * tau(Z)`` for standard normal Z,
where ``tau(z) = (exp(g*z) - 1)/g * exp(h*z^2/2)`` (limit ``z*exp(h*z^2/2)``
at g=0).  This module provides the transformation, its derivatives, the
numeric inverse, the exact log-density, CDF, quantile function and a seeded
sampler.  Everything here is exact up to root-finder tolerance; the
knot-interpolated approximation lives in :mod:`tukeygh.approx_lik`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import ndtr, ndtri

from .errors import DomainError, NonConvergence

# Below this |g| the g->0 limit forms are used to avoid catastrophic
# cancellation in (exp(g*z)-1)/g and friends.
G_SWITCH = 1e-8

# Switch point for the series evaluation of the u-ratios below (u = g*z).
_U_SERIES = 1e-4

LOG_2PI = np.log(2.0 * np.pi)

INVERSION_MAX_ITER = 200


@dataclass(frozen=True)
class GhParams:
    """Parameter vector (xi, omega, g, h) of a g-and-h distribution."""

    xi: float
    omega: float
    g: float
    h: float

    def __post_init__(self):
        vals = (self.xi, self.omega, self.g, self.h)
        if not all(np.isfinite(v) for v in vals):
            raise DomainError(f"parameters must be finite, got {vals}")
        if self.omega <= 0:
            raise DomainError(f"omega must be positive, got {self.omega}")
        if self.h < 0:
            raise DomainError(f"h must be nonnegative, got {self.h}")

    def as_array(self):
        return np.array([self.xi, self.omega, self.g, self.h])

    @staticmethod
    def from_array(v):
        return GhParams(float(v[0]), float(v[1]), float(v[2]), float(v[3]))


def _e_ratio(u):
    """(exp(u) - 1)/u with the removable singularity at u=0 filled in."""
    u = np.asarray(u, dtype=float)
    small = np.abs(u) < _U_SERIES
    us = np.where(small, 0.0, u)
    with np.errstate(invalid="ignore", over="ignore"):
        full = np.expm1(us) / np.where(small, 1.0, us)
    series = 1.0 + u / 2.0 + u * u / 6.0 + u * u * u / 24.0
    return np.where(small, series, full)


def _g_ratio(u):
    """(u*exp(u) - exp(u) + 1)/u^2, the g-derivative ratio; 1/2 at u=0."""
    u = np.asarray(u, dtype=float)
    small = np.abs(u) < _U_SERIES
    us = np.where(small, 1.0, u)
    with np.errstate(invalid="ignore", over="ignore"):
        eu = np.exp(us)
        full = (us * eu - eu + 1.0) / (us * us)
    series = 0.5 + u / 3.0 + u * u / 8.0 + u * u * u / 30.0
    return np.where(small, series, full)


def tau(z, g, h):
    """The monotone transformation; accepts scalars or arrays in ``z``."""
    z = np.asarray(z, dtype=float)
    with np.errstate(over="ignore"):
        if abs(g) <= G_SWITCH:
            core = z
        else:
            core = np.expm1(g * z) / g
        out = core * np.exp(h * z * z / 2.0)
    if out.ndim == 0:
        return float(out)
    return out


def tau_prime(z, g, h):
    """First derivative of ``tau`` in z; strictly positive for h >= 0."""
    z = np.asarray(z, dtype=float)
    with np.errstate(over="ignore"):
        if abs(g) <= G_SWITCH:
            bracket = 1.0 + h * z * z
        else:
            egz = np.exp(g * z)
            bracket = egz + np.expm1(g * z) / g * h * z
        out = bracket * np.exp(h * z * z / 2.0)
    if out.ndim == 0:
        return float(out)
    return out


def dtau_dg(z, g, h):
    """Partial derivative of ``tau`` with respect to g (z fixed)."""
    z = np.asarray(z, dtype=float)
    with np.errstate(over="ignore"):
        out = z * z * _g_ratio(g * z) * np.exp(h * z * z / 2.0)
    if out.ndim == 0:
        return float(out)
    return out


def dtau_dh(z, g, h):
    """Partial derivative of ``tau`` with respect to h (z fixed)."""
    z = np.asarray(z, dtype=float)
    out = np.asarray(tau(z, g, h)) * z * z / 2.0
    if out.ndim == 0:
        return float(out)
    return out


def tau_range(g, h):
    """Open interval (lo, hi) spanned by ``tau``; bounded on one side iff h=0, g!=0."""
    if h > 0 or abs(g) <= G_SWITCH:
        return (-np.inf, np.inf)
    if g > 0:
        return (-1.0 / g, np.inf)
    return (-np.inf, -1.0 / g)


def tau_inverse(x, g, h, tol=1e-12):
    """Solve tau(z) = x by bracket expansion plus safeguarded Newton.

    Convergence target is |tau(z) - x| <= tol * max(1, |x|).
    """
    if tol <= 0:
        raise DomainError("tol must be positive")
    x = float(x)
    if x == 0.0:
        return 0.0
    lo, hi = tau_range(g, h)
    if not (lo < x < hi):
        raise NonConvergence(f"x={x} outside the range of tau for g={g}, h={h}")

    # Bracket: start from a sign-corrected guess and expand geometrically.
    z0 = x / (1.0 + h)
    if z0 == 0.0 or (z0 > 0) != (x > 0):
        z0 = np.sign(x)
    a, b = (0.0, abs(z0)) if x > 0 else (-abs(z0), 0.0)
    target = x
    for _ in range(INVERSION_MAX_ITER):
        if x > 0:
            if tau(b, g, h) >= target:
                break
            b *= 2.0
        else:
            if tau(a, g, h) <= target:
                break
            a *= 2.0
    else:
        raise NonConvergence(f"could not bracket tau_inverse({x}, g={g}, h={h})")

    z = min(max(z0, a), b)
    atol = tol * max(1.0, abs(x))
    for _ in range(INVERSION_MAX_ITER):
        f = tau(z, g, h) - x
        if abs(f) <= atol:
            return z
        if f > 0:
            b = z
        else:
            a = z
        fp = tau_prime(z, g, h)
        z_new = z - f / fp if fp > 0 and np.isfinite(fp) else np.nan
        if not (a < z_new < b):
            z_new = 0.5 * (a + b)
        z = z_new
    raise NonConvergence(
        f"tau_inverse did not reach tolerance {tol} in {INVERSION_MAX_ITER} iterations",
        best=z,
    )


def varphi(z, p: GhParams):
    """Log-density expressed as a function of the normal score z.

    Equals the exact log-density of y = xi + omega*tau(z).  Vectorized in z.
    """
    z = np.asarray(z, dtype=float)
    g, h = p.g, p.h
    with np.errstate(over="ignore"):
        if abs(g) <= G_SWITCH:
            bracket = 1.0 + h * z * z
        else:
            bracket = np.exp(g * z) + np.expm1(g * z) / g * h * z
        out = (
            -0.5 * (1.0 + h) * z * z
            - np.log(bracket)
            - np.log(p.omega)
            - 0.5 * LOG_2PI
        )
    if out.ndim == 0:
        return float(out)
    return out


def dvarphi_dz(z, p: GhParams):
    """Derivative of ``varphi`` in z with the parameters held fixed."""
    z = np.asarray(z, dtype=float)
    g, h = p.g, p.h
    with np.errstate(over="ignore", invalid="ignore"):
        if abs(g) <= G_SWITCH:
            bracket = 1.0 + h * z * z
            out = -(1.0 + h) * z - 2.0 * h * z / bracket
        else:
            egz = np.exp(g * z)
            em = np.expm1(g * z) / g
            bracket = egz + em * h * z
            out = -(1.0 + h) * z - g - h * (em + z) / bracket
    if out.ndim == 0:
        return float(out)
    return out


def log_density_exact(y, p: GhParams, tol=1e-12):
    """Exact log-density via root-solving for the normal score (scalar y)."""
    x = (float(y) - p.xi) / p.omega
    z = tau_inverse(x, p.g, p.h, tol)
    return varphi(z, p)


def quantile(prob, p: GhParams):
    """Theoretical quantile xi + omega * tau(Phi^{-1}(prob))."""
    prob = np.asarray(prob, dtype=float)
    if np.any(prob <= 0) or np.any(prob >= 1):
        raise DomainError("prob must lie strictly inside (0, 1)")
    out = p.xi + p.omega * np.asarray(tau(ndtri(prob), p.g, p.h))
    if out.ndim == 0:
        return float(out)
    return out


def cdf(y, p: GhParams, tol=1e-12):
    """Cumulative distribution function Phi(tau^{-1}((y - xi)/omega))."""
    x = (float(y) - p.xi) / p.omega
    lo, hi = tau_range(p.g, p.h)
    if x <= lo:
        return 0.0
    if x >= hi:
        return 1.0
    return float(ndtr(tau_inverse(x, p.g, p.h, tol)))


def sample(n, p: GhParams, seed):
    """Draw n variates through the defining transformation.

    Uses a counter-based (Philox) uniform stream mapped through the inverse
    normal CDF, so identical seeds give identical output on any platform.
    """
    if n < 1:
        raise DomainError("n must be at least 1")
    rng = np.random.Generator(np.random.Philox(seed))
    u = rng.random(n)
    # random() can return 0.0 exactly; push off the endpoint for ndtri.
    np.clip(u, 1e-300, 1.0 - 1e-16, out=u)
    z = ndtri(u)
    return p.xi + p.omega * np.asarray(tau(z, p.g, p.h))
