"""Integrator kernels with a compiled fast path and a NumPy fallback.

The backend is selected once at import time: the compiled extension is used
when it built successfully, otherwise the pure-Python module. Setting the
environment variable ``LATTICEDEC_PURE_PYTHON`` (to any non-empty value)
forces the fallback; ``BACKEND`` reports which one is active.
"""

from __future__ import annotations

import os

from latticedec._kernels import _ref

if os.environ.get("LATTICEDEC_PURE_PYTHON"):
    _impl = _ref
else:
    try:
        from latticedec._kernels import _core as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _ref

BACKEND: str = _impl.BACKEND
dephasing_rk4 = _impl.dephasing_rk4
eom_rk4 = _impl.eom_rk4

__all__ = ["BACKEND", "dephasing_rk4", "eom_rk4"]
