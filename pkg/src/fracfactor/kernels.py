"""Select the enumeration kernel backend at import time.

The compiled ``_kernels`` extension is used when it was built; otherwise the
pure-Python ``_kernels_py`` is used. Setting ``FRACFACTOR_PURE=1`` forces the
fallback.
"""

import importlib
import os

__all__ = ["BACKEND", "scan_pairs", "scan_min_t", "load_backend", "available_backends"]


def load_backend(name: str):
    """Return the kernel module for ``"cython"`` or ``"python"``."""
    if name == "cython":
        return importlib.import_module("fracfactor._kernels")
    if name == "python":
        return importlib.import_module("fracfactor._kernels_py")
    raise ValueError(f"unknown kernel backend {name!r}")


def available_backends() -> list[str]:
    names = []
    for name in ("cython", "python"):
        try:
            load_backend(name)
        except ImportError:
            continue
        names.append(name)
    return names


if os.environ.get("FRACFACTOR_PURE", "") not in ("", "0"):
    _impl = load_backend("python")
    BACKEND = "python"
else:
    try:
        _impl = load_backend("cython")
        BACKEND = "cython"
    except ImportError:
        _impl = load_backend("python")
        BACKEND = "python"

scan_pairs = _impl.scan_pairs
scan_min_t = _impl.scan_min_t
