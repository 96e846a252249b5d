"""Pure-NumPy/Python reference implementations of the integrator kernels.

These are the semantics of record; the compiled module in ``_core.pyx``
reproduces the same arithmetic element by element. Both kernels advance a
fixed-step classic RK4 scheme and take rate samples on the half-step grid
t_j = j*dt/2 (length 2*n_steps + 1) so every RK4 stage sees the rate at its
own stage time.
"""

from __future__ import annotations

import math

import numpy as np

BACKEND = "python"


def dephasing_rk4(
    rho0: np.ndarray,
    local_coeff: np.ndarray,
    coll_coeff: np.ndarray,
    gamma_sc: float,
    gamma_stages: np.ndarray,
    dt: float,
    n_steps: int,
) -> np.ndarray:
    """Integrate the dephasing generator, elementwise diagonal in the z-basis:

        d rho[l,m] / dt = (gamma_sc/2 * local_coeff[l,m]
                           + Gamma_QG(t)/2 * coll_coeff[l,m]) * rho[l,m]

    ``gamma_stages`` holds Gamma_QG(t_j) on the half-step grid. Returns a new
    array; ``rho0`` is not modified.
    """
    rho = np.array(rho0, dtype=np.complex128, copy=True)
    a_loc = 0.5 * gamma_sc * local_coeff
    c_half = 0.5 * coll_coeff
    half_dt = 0.5 * dt
    sixth_dt = dt / 6.0
    for s in range(n_steps):
        a0 = a_loc + gamma_stages[2 * s] * c_half
        ah = a_loc + gamma_stages[2 * s + 1] * c_half
        a1 = a_loc + gamma_stages[2 * s + 2] * c_half
        k1 = a0 * rho
        k2 = ah * (rho + half_dt * k1)
        k3 = ah * (rho + half_dt * k2)
        k4 = a1 * (rho + dt * k3)
        rho = rho + sixth_dt * (k1 + 2.0 * (k2 + k3) + k4)
    return rho


def eom_rk4(
    x0: float,
    v0: float,
    dt: float,
    n_steps: int,
    accel: float,
    two_k: float,
    phase: np.ndarray,
) -> tuple[np.ndarray, np.ndarray]:
    """Integrate  x'' = -accel * sin(two_k * x - phase(t))  with classic RK4.

    ``phase`` holds 2k*d(t_j) on the half-step grid. Returns position and
    velocity arrays of length n_steps + 1.
    """
    xs = np.empty(n_steps + 1)
    vs = np.empty(n_steps + 1)
    x = float(x0)
    v = float(v0)
    xs[0] = x
    vs[0] = v
    ph = [float(p) for p in phase]  # plain floats: the hot loop is Python here
    sin = math.sin
    half_dt = 0.5 * dt
    sixth_dt = dt / 6.0
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
    return xs, vs
