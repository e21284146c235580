"""Kernel backend selection.

The hot scalar kernels exist twice: a Cython extension (``shellpol._kernels``)
and a pure-Python fallback (``shellpol._kernels_py``).  The compiled module is
preferred when importable; ``SHELLPOL_BACKEND=py`` or ``=cy`` forces a choice.
"""
from __future__ import annotations

import os

from . import _kernels_py

_requested = os.environ.get("SHELLPOL_BACKEND", "auto").strip().lower()

kernels = _kernels_py
BACKEND = "python"

if _requested in ("auto", "cy", "cython", "c"):
    try:
        from . import _kernels as _compiled
        kernels = _compiled
        BACKEND = "cython"
    except ImportError:
        if _requested != "auto":
            raise ImportError(
                "SHELLPOL_BACKEND requested the compiled kernels but "
                "shellpol._kernels is not built; install with the Cython "
                "extension or set SHELLPOL_BACKEND=py")
elif _requested in ("py", "python", "pure"):
    pass
else:
    raise ValueError(f"unrecognized SHELLPOL_BACKEND={_requested!r}")


def backend_name() -> str:
    """Name of the kernel implementation in use ('cython' or 'python')."""
    return BACKEND


def available_backends() -> dict:
    """Map of backend name to kernel module, for parity tests and benchmarks."""
    out = {"python": _kernels_py}
    try:
        from . import _kernels as _compiled
        out["cython"] = _compiled
    except ImportError:
        pass
    return out
