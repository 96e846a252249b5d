# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled integrator kernels.

Same contracts as ``_ref.py``; see that module for the reference semantics.
The dephasing kernel runs one scalar RK4 recurrence per matrix element, the
equation-of-motion kernel one scalar RK4 state pair, both in C loops.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport sin

cnp.import_array()

BACKEND = "compiled"


def dephasing_rk4(rho0, local_coeff, coll_coeff, double gamma_sc,
                  gamma_stages, double dt, Py_ssize_t n_steps):
    rho_arr = np.array(rho0, dtype=np.complex128, copy=True, order="C")
    cdef double complex[:, ::1] rho = rho_arr
    cdef const double[:, ::1] loc = np.ascontiguousarray(local_coeff, dtype=np.float64)
    cdef const double[:, ::1] col = np.ascontiguousarray(coll_coeff, dtype=np.float64)
    cdef const double[::1] g = np.ascontiguousarray(gamma_stages, dtype=np.float64)
    cdef Py_ssize_t dim = rho.shape[0]
    cdef Py_ssize_t i, j, s
    cdef double a_loc, c_half, a0, ah, a1, r1, r2, r3, r4, fac
    cdef double half_dt = 0.5 * dt
    cdef double sixth_dt = dt / 6.0
    cdef double complex z
    with nogil:
        for i in range(dim):
            for j in range(dim):
                a_loc = 0.5 * gamma_sc * loc[i, j]
                c_half = 0.5 * col[i, j]
                z = rho[i, j]
                for s in range(n_steps):
                    # Scalar form of the elementwise RK4 update: because the
                    # generator is linear and diagonal, each step multiplies
                    # the element by a real factor.
                    a0 = a_loc + g[2 * s] * c_half
                    ah = a_loc + g[2 * s + 1] * c_half
                    a1 = a_loc + g[2 * s + 2] * c_half
                    r1 = a0
                    r2 = ah * (1.0 + half_dt * r1)
                    r3 = ah * (1.0 + half_dt * r2)
                    r4 = a1 * (1.0 + dt * r3)
                    fac = 1.0 + sixth_dt * (r1 + 2.0 * (r2 + r3) + r4)
                    z = z * fac
                rho[i, j] = z
    return rho_arr


def eom_rk4(double x0, double v0, double dt, Py_ssize_t n_steps,
            double accel, double two_k, phase):
    xs_arr = np.empty(n_steps + 1)
    vs_arr = np.empty(n_steps + 1)
    cdef double[::1] xs = xs_arr
    cdef double[::1] vs = vs_arr
    cdef const double[::1] ph = np.ascontiguousarray(phase, dtype=np.float64)
    cdef double x = x0
    cdef double v = v0
    cdef double half_dt = 0.5 * dt
    cdef double sixth_dt = dt / 6.0
    cdef double p0, pm, p1, k1x, k1v, k2x, k2v, k3x, k3v, k4x, k4v
    cdef Py_ssize_t s
    xs[0] = x
    vs[0] = v
    with nogil:
        for s in range(n_steps):
            p0 = ph[2 * s]
            pm = ph[2 * s + 1]
            p1 = ph[2 * s + 2]
            k1x = v
            k1v = -accel * sin(two_k * x - p0)
            k2x = v + half_dt * k1v
            k2v = -accel * sin(two_k * (x + half_dt * k1x) - pm)
            k3x = v + half_dt * k2v
            k3v = -accel * sin(two_k * (x + half_dt * k2x) - pm)
            k4x = v + dt * k3v
            k4v = -accel * sin(two_k * (x + dt * k3x) - p1)
            x += sixth_dt * (k1x + 2.0 * (k2x + k3x) + k4x)
            v += sixth_dt * (k1v + 2.0 * (k2v + k3v) + k4v)
            xs[s + 1] = x
            vs[s + 1] = v
    return xs_arr, vs_arr
