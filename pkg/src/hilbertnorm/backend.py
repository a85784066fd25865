"""Kernel backend selection: compiled extension if available, numpy otherwise.

Set HILBERTNORM_BACKEND=python to force the pure-numpy fallback (useful for
the benchmark and for debugging); any other value, or none, prefers the
compiled module.
"""

from __future__ import annotations

import os

from . import _kernels_py

_requested = os.environ.get("HILBERTNORM_BACKEND", "").strip().lower()

if _requested in ("python", "pure"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

sup_F_polar = _impl.sup_F_polar
tt_norm_upper_midpoint = _impl.tt_norm_upper_midpoint
sup_G_grid = _impl.sup_G_grid


def available_backends() -> dict:
    """Name -> module for every importable backend (used by the benchmark)."""
    out = {"python": _kernels_py}
    try:
        from . import _kernels

        out["compiled"] = _kernels
    except ImportError:
        pass
    return out
