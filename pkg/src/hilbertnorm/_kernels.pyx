# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the brute-force kernels in `_kernels_py`.

Tight C loops over millions of grid points / panels; selected at import by
the backend module when the extension built successfully.
"""

from libc.math cimport pow, sqrt

import math

import numpy as np


cdef double _one_minus_x0(double alpha, double t) noexcept nogil:
    cdef double disc = sqrt(4.0 * alpha * alpha * t - 2.0 * alpha * t
                            + alpha * alpha - 2.0 * alpha + 1.0)
    cdef double numer = (2.0 * alpha - 1.0) * t * (2.0 * alpha / (disc + 1.0 - alpha) + (1.0 - t))
    return numer / (alpha + 2.0 * alpha * t - t + disc)


cdef double _G_from_gap(double alpha, double t, double m) noexcept nogil:
    cdef double ratio = (2.0 - m - t) / ((1.0 - t) * (1.0 - t) * (m + t))
    return pow(m, 2.0 * alpha - 1.0) * pow(ratio, alpha)


def sup_F_polar(double alpha, double t, Py_ssize_t n_r, Py_ssize_t n_theta,
                double r_max=1.0 - 1e-7):
    """Maximum of the composition-operator profile F over an n_r x n_theta polar grid.

    Radii are r_max * (i+1)/n_r; angles cover the full circle with theta = 0
    on the grid, which is where the supremum lives.
    """
    cdef double q = 1.0 - t
    cdef double t2 = t * t
    cdef double best = 0.0
    cdef double r, r2, qr, a2, val, c
    cdef Py_ssize_t i, j
    cdef double[::1] cos_theta = np.cos(2.0 * math.pi * np.arange(n_theta) / n_theta)

    with nogil:
        for i in range(n_r):
            r = r_max * (<double>(i + 1) / <double>n_r)
            r2 = r * r
            qr = q * r
            for j in range(n_theta):
                c = cos_theta[j]
                a2 = 1.0 - 2.0 * qr * c + qr * qr
                val = pow(a2, alpha - 0.5) * pow((1.0 - r2) / (a2 - t2), alpha)
                if val > best:
                    best = val
    return best


def tt_norm_upper_midpoint(double alpha, long n=1000000):
    """Midpoint-rule oracle for the integral over t of the norm of T_t.

    Each sub-integral uses n midpoint panels on a power-graded mesh that
    absorbs the algebraic endpoint singularity (t^(alpha-1) at 0,
    (1-t)^(-alpha) at 1); a uniform mesh cannot reach useful accuracy there.
    """
    cdef double tstar, u, t, i1 = 0.0, i2 = 0.0
    cdef double inv_a = 1.0 / alpha
    cdef double inv_b = 1.0 / (1.0 - alpha)
    cdef long j

    if alpha > 2.0 / 3.0:
        tstar = (3.0 * alpha - 2.0) / (4.0 * alpha - 2.0)
        with nogil:
            for j in range(n):
                u = (j + 0.5) / n
                t = tstar * pow(u, inv_a)
                i1 += pow(u, inv_a - 1.0) * _G_from_gap(alpha, t, _one_minus_x0(alpha, t))
                t = 1.0 - (1.0 - tstar) * pow(u, inv_b)
                i2 += pow(t, alpha - 1.0)
        return (tstar * inv_a / n) * i1 + (pow(1.0 - tstar, 1.0 - alpha) * inv_b / n) * i2

    with nogil:
        for j in range(n):
            u = (j + 0.5) / n
            t = 0.5 * pow(u, inv_a)
            i1 += pow(1.0 - t, -alpha)
            t = 1.0 - 0.5 * pow(u, inv_b)
            i2 += pow(t, alpha - 1.0)
    return (pow(0.5, alpha) * inv_a / n) * i1 + (pow(0.5, 1.0 - alpha) * inv_b / n) * i2


def sup_G_grid(double alpha, double t, double step=1e-5):
    """Argmax and max of the radial profile G over a uniform grid on (t-1, 1-t]."""
    cdef double lo = t - 1.0
    cdef double hi = 1.0 - t
    cdef long n = <long>((hi - lo) / step)
    cdef double q2 = (1.0 - t) * (1.0 - t)
    cdef double best = -1.0, best_x = lo, x, val
    cdef long i

    with nogil:
        for i in range(1, n + 1):
            x = lo + step * i
            if x > hi:
                x = hi
            val = pow(1.0 - x, 2.0 * alpha - 1.0) * pow((1.0 - t + x) / (q2 * (1.0 + t - x)), alpha)
            if val > best:
                best = val
                best_x = x
        x = hi
        val = pow(1.0 - x, 2.0 * alpha - 1.0) * pow((1.0 - t + x) / (q2 * (1.0 + t - x)), alpha)
        if val > best:
            best = val
            best_x = x
    return best_x, best
