"""Kernel backend selection.

``LCAEXP_BACKEND=numpy`` forces the vectorised numpy kernels; the default is
numba, falling back to numpy when numba cannot be imported.
"""

import os
import warnings

from . import _kernels_numpy

ENV_FLAG = "LCAEXP_BACKEND"


def _load_numba():
    try:
        from . import _kernels_numba
    except ImportError as exc:  # pragma: no cover - numba is a declared dependency
        warnings.warn(f"numba unavailable ({exc}); using numpy kernels")
        return None
    return _kernels_numba


def get_kernels(name: str | None = None):
    name = (name or os.environ.get(ENV_FLAG, "numba")).lower()
    if name == "numpy":
        return _kernels_numpy
    if name != "numba":
        raise ValueError(f"unknown oracle backend {name!r} (expected 'numba' or 'numpy')")
    return _load_numba() or _kernels_numpy


def backend_name(name: str | None = None) -> str:
    return "numpy" if get_kernels(name) is _kernels_numpy else "numba"
