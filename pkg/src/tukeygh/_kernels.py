"""Kernel backend selection.

The compiled Cython kernels are used when importable; otherwise the NumPy
fallback takes over.  Set ``GH_KERNEL_BACKEND=python`` or ``=c`` to force a
backend (forcing ``c`` raises if the extension is missing).
"""

import os

from . import _kernels_py

_requested = os.environ.get("GH_KERNEL_BACKEND", "auto")

if _requested not in ("auto", "c", "python"):
    raise ValueError(f"GH_KERNEL_BACKEND must be auto, c or python, got {_requested!r}")

_impl = None
if _requested in ("auto", "c"):
    try:
        from . import _ckernels as _impl

        BACKEND = "c"
    except ImportError:
        if _requested == "c":
            raise
        _impl = None
if _impl is None:
    _impl = _kernels_py
    BACKEND = "python"

bin_assign = _impl.bin_assign
loglik_sum = _impl.loglik_sum
loglik_grad = _impl.loglik_grad
