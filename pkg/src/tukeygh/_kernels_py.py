"""NumPy implementation of the hot likelihood kernels.

This is the fallback used when the compiled extension is unavailable; the
interface matches :mod:`tukeygh._ckernels` exactly.  All inputs are assumed
validated by the caller (:mod:`tukeygh.approx_lik`): the sample is sorted,
lies inside the transformed knot range, and the knot vectors are strictly
increasing.
"""

from __future__ import annotations

import numpy as np

from .ghdist import LOG_2PI, _e_ratio, _g_ratio


def bin_assign(y, y_knots):
    """Bin index per observation, left-closed cells, last knot closed right.

    Binary search here; the compiled kernel uses an O(n + K) merge scan over
    the two sorted vectors.  Outputs are identical.
    """
    bins = np.searchsorted(y_knots, y, side="right") - 1
    np.clip(bins, 0, len(y_knots) - 2, out=bins)
    return bins.astype(np.intp)


def _interp_z(y, bins, z_knots, tau_knots, xi, omega):
    dz = z_knots[1] - z_knots[0]
    dtau = tau_knots[bins + 1] - tau_knots[bins]
    t = (y - (xi + omega * tau_knots[bins])) / (omega * dtau)
    return z_knots[bins] + t * dz, t, dtau, dz


def loglik_sum(y, bins, z_knots, tau_knots, xi, omega, g, h):
    """Sum of the score-space log-density over interpolated z values."""
    zt, _, _, _ = _interp_z(y, bins, z_knots, tau_knots, xi, omega)
    u = g * zt
    big = np.exp(u) + h * zt * zt * _e_ratio(u)
    n = len(y)
    return float(
        -0.5 * (1.0 + h) * np.dot(zt, zt)
        - np.sum(np.log(big))
        - n * (np.log(omega) + 0.5 * LOG_2PI)
    )


def loglik_grad(y, bins, z_knots, tau_knots, taug_knots, tauh_knots, xi, omega, g, h):
    """Approximated log-likelihood and its exact 4-gradient.

    Differentiates the implemented approximation: both the explicit parameter
    dependence of the score-space density and the dependence of the
    interpolated z on the transformed knot positions.
    """
    zt, t, dtau, dz = _interp_z(y, bins, z_knots, tau_knots, xi, omega)
    n = len(y)

    u = g * zt
    eu = np.exp(u)
    e_rat = _e_ratio(u)
    big = eu + h * zt * zt * e_rat
    loglik = float(
        -0.5 * (1.0 + h) * np.dot(zt, zt)
        - np.sum(np.log(big))
        - n * (np.log(omega) + 0.5 * LOG_2PI)
    )

    # d(varphi)/dz at the interpolated z, parameters held fixed
    w = -(1.0 + h) * zt - (g * eu + h * zt * (e_rat + eu)) / big

    # sensitivity of the interpolated z to each parameter
    x = (y - xi) / omega
    dzt_dxi = -dz / (omega * dtau)
    dzt_dom = dzt_dxi * x
    dtg = taug_knots[bins + 1] - taug_knots[bins]
    dth = tauh_knots[bins + 1] - tauh_knots[bins]
    dzt_dg = -dz * (taug_knots[bins] + t * dtg) / dtau
    dzt_dh = -dz * (tauh_knots[bins] + t * dth) / dtau

    # explicit parameter derivatives of varphi at fixed z
    phi_g = -(zt * eu + h * zt * zt * zt * _g_ratio(u)) / big
    phi_h = -0.5 * zt * zt - zt * zt * e_rat / big

    grad = np.array(
        [
            np.dot(w, dzt_dxi),
            np.dot(w, dzt_dom) - n / omega,
            np.dot(w, dzt_dg) + np.sum(phi_g),
            np.dot(w, dzt_dh) + np.sum(phi_h),
        ]
    )
    return loglik, grad
