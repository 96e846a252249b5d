"""Benchmark the compiled integrator kernels against the NumPy/Python fallback.

Run:  python3 benchmarks/bench_kernels.py
"""

from __future__ import annotations

import time

import numpy as np

from latticedec._kernels import _ref

try:
    from latticedec._kernels import _core
except ImportError:
    _core = None


def _time(fn, *args, repeat: int = 3) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def dephasing_case(n_atoms: int, n_steps: int):
    rng = np.random.default_rng(42)
    dim = 1 << n_atoms
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = a @ a.conj().T
    rho /= np.trace(rho).real
    bits = ((np.arange(dim)[:, None] >> np.arange(n_atoms)[None, :]) & 1).astype(float)
    spins = 2.0 * bits - 1.0
    local = spins @ spins.T - n_atoms
    sz = spins.sum(axis=1)
    coll = np.outer(sz, sz) - 0.5 * ((sz**2)[:, None] + (sz**2)[None, :])
    stages = 0.4 + 0.1 * np.sin(np.linspace(0.0, 3.0, 2 * n_steps + 1))
    dt = 1.0 / n_steps
    return (rho, local, coll, 0.8, stages, dt, n_steps)


def eom_case(n_steps: int):
    two_k = 2.0 * 7.9e6
    phase = two_k * 1e-3 * np.sin(np.linspace(0.0, np.pi, 2 * n_steps + 1)) ** 2
    dt = 1e-7
    return (1e-9, 0.0, dt, n_steps, 5.0e7, two_k, phase)


def main() -> None:
    cases = [
        ("dephasing_rk4 N=4, 1e4 steps", dephasing_case(4, 10_000)),
        ("dephasing_rk4 N=6, 2e3 steps", dephasing_case(6, 2_000)),
        ("eom_rk4 2e5 steps", eom_case(200_000)),
    ]
    print(f"{'case':<32} {'python':>10} {'compiled':>10} {'speedup':>8}")
    for name, args in cases:
        fn_ref = _ref.dephasing_rk4 if name.startswith("dephasing") else _ref.eom_rk4
        t_ref = _time(fn_ref, *args)
        if _core is None:
            print(f"{name:<32} {t_ref:>9.4f}s {'n/a':>10} {'n/a':>8}")
            continue
        fn_core = _core.dephasing_rk4 if name.startswith("dephasing") else _core.eom_rk4
        t_core = _time(fn_core, *args)
        out_ref = fn_ref(*args)
        out_core = fn_core(*args)
        ref0 = out_ref[0] if isinstance(out_ref, tuple) else out_ref
        core0 = out_core[0] if isinstance(out_core, tuple) else out_core
        worst = float(np.max(np.abs(np.asarray(ref0) - np.asarray(core0))))
        print(
            f"{name:<32} {t_ref:>9.4f}s {t_core:>9.4f}s {t_ref / t_core:>7.1f}x"
            f"   (max |diff| {worst:.2e})"
        )


if __name__ == "__main__":
    main()
