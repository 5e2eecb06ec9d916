"""Pivot-kernel selection: compiled extension when available, NumPy otherwise.

``CARBONMARKET_LP_BACKEND=python`` or ``=compiled`` overrides the automatic
choice at import time.  Solvers also accept an explicit kernel argument so
tests and benchmarks can exercise both implementations in one process.
"""

from __future__ import annotations

import os

from . import _kernel_py

try:
    from . import _speedups
except ImportError:
    _speedups = None

_FORCED = os.environ.get("CARBONMARKET_LP_BACKEND", "").strip().lower()


def available_kernels() -> dict:
    """Name -> pivot-loop callable for every importable backend."""
    kernels = {"python": _kernel_py.run_simplex}
    if _speedups is not None:
        kernels["compiled"] = _speedups.run_simplex
    return kernels


def default_backend_name() -> str:
    if _FORCED == "python":
        return "python"
    if _FORCED == "compiled":
        if _speedups is None:
            raise ImportError(
                "CARBONMARKET_LP_BACKEND=compiled but the extension is not built"
            )
        return "compiled"
    return "compiled" if _speedups is not None else "python"


def default_kernel():
    return available_kernels()[default_backend_name()]
