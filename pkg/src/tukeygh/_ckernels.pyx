# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled likelihood kernels; interface mirrors tukeygh._kernels_py."""

import numpy as np

cimport numpy as cnp
from libc.math cimport exp, expm1, fabs, log

cnp.import_array()

cdef double LOG_2PI = 1.8378770664093453


cdef inline double e_ratio(double u) noexcept:
    # (exp(u)-1)/u with series near 0
    if fabs(u) < 1e-4:
        return 1.0 + u / 2.0 + u * u / 6.0 + u * u * u / 24.0
    return expm1(u) / u


cdef inline double g_ratio(double u) noexcept:
    # (u*exp(u)-exp(u)+1)/u^2 with series near 0
    cdef double eu
    if fabs(u) < 1e-4:
        return 0.5 + u / 3.0 + u * u / 8.0 + u * u * u / 30.0
    eu = exp(u)
    return (u * eu - eu + 1.0) / (u * u)


def bin_assign(cnp.ndarray[cnp.float64_t, ndim=1] y,
               cnp.ndarray[cnp.float64_t, ndim=1] y_knots):
    """O(n + K) merge scan of the sorted sample against the sorted knots."""
    cdef Py_ssize_t n = y.shape[0]
    cdef Py_ssize_t m = y_knots.shape[0]
    cdef cnp.ndarray[cnp.intp_t, ndim=1] bins = np.empty(n, dtype=np.intp)
    cdef Py_ssize_t i, k = 0
    for i in range(n):
        while k < m - 2 and y_knots[k + 1] <= y[i]:
            k += 1
        bins[i] = k
    return bins


def loglik_sum(cnp.ndarray[cnp.float64_t, ndim=1] y,
               cnp.ndarray[cnp.intp_t, ndim=1] bins,
               cnp.ndarray[cnp.float64_t, ndim=1] z_knots,
               cnp.ndarray[cnp.float64_t, ndim=1] tau_knots,
               double xi, double omega, double g, double h):
    cdef Py_ssize_t n = y.shape[0]
    cdef double dz = z_knots[1] - z_knots[0]
    cdef double acc = 0.0
    cdef Py_ssize_t i, k
    cdef double dtau, t, zt, u, big
    for i in range(n):
        k = bins[i]
        dtau = tau_knots[k + 1] - tau_knots[k]
        t = (y[i] - (xi + omega * tau_knots[k])) / (omega * dtau)
        zt = z_knots[k] + t * dz
        u = g * zt
        big = exp(u) + h * zt * zt * e_ratio(u)
        acc += -0.5 * (1.0 + h) * zt * zt - log(big)
    return acc - n * (log(omega) + 0.5 * LOG_2PI)


def loglik_grad(cnp.ndarray[cnp.float64_t, ndim=1] y,
                cnp.ndarray[cnp.intp_t, ndim=1] bins,
                cnp.ndarray[cnp.float64_t, ndim=1] z_knots,
                cnp.ndarray[cnp.float64_t, ndim=1] tau_knots,
                cnp.ndarray[cnp.float64_t, ndim=1] taug_knots,
                cnp.ndarray[cnp.float64_t, ndim=1] tauh_knots,
                double xi, double omega, double g, double h):
    cdef Py_ssize_t n = y.shape[0]
    cdef double dz = z_knots[1] - z_knots[0]
    cdef double acc = 0.0
    cdef double g_xi = 0.0, g_om = 0.0, g_g = 0.0, g_h = 0.0
    cdef Py_ssize_t i, k
    cdef double dtau, t, zt, u, eu, er, big, w, x
    cdef double dzt_dxi, dzt_dom, dzt_dg, dzt_dh, phi_g, phi_h
    for i in range(n):
        k = bins[i]
        dtau = tau_knots[k + 1] - tau_knots[k]
        t = (y[i] - (xi + omega * tau_knots[k])) / (omega * dtau)
        zt = z_knots[k] + t * dz
        u = g * zt
        eu = exp(u)
        er = e_ratio(u)
        big = eu + h * zt * zt * er
        acc += -0.5 * (1.0 + h) * zt * zt - log(big)

        w = -(1.0 + h) * zt - (g * eu + h * zt * (er + eu)) / big
        x = (y[i] - xi) / omega
        dzt_dxi = -dz / (omega * dtau)
        dzt_dom = dzt_dxi * x
        dzt_dg = -dz * (taug_knots[k]
                        + t * (taug_knots[k + 1] - taug_knots[k])) / dtau
        dzt_dh = -dz * (tauh_knots[k]
                        + t * (tauh_knots[k + 1] - tauh_knots[k])) / dtau
        phi_g = -(zt * eu + h * zt * zt * zt * g_ratio(u)) / big
        phi_h = -0.5 * zt * zt - zt * zt * er / big

        g_xi += w * dzt_dxi
        g_om += w * dzt_dom
        g_g += w * dzt_dg + phi_g
        g_h += w * dzt_dh + phi_h

    loglik = acc - n * (log(omega) + 0.5 * LOG_2PI)
    grad = np.array([g_xi, g_om - n / omega, g_g, g_h])
    return loglik, grad
