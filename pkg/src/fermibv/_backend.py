"""Kernel backend selection.

Prefers the compiled extension, falls back to the pure-Python kernels when
the extension was not built.  Set ``FERMIBV_PURE_PYTHON=1`` to force the
fallback (used by the benchmark and the backend-parity tests).
"""
import os

if os.environ.get("FERMIBV_PURE_PYTHON"):
    from . import _kernels_py as kernels

    BACKEND = "python"
else:
    try:
        from . import _kernels as kernels  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        from . import _kernels_py as kernels  # type: ignore[no-redef]

        BACKEND = "python"

product4 = kernels.product4
sandwich4 = kernels.sandwich4
canonicity_residuals = kernels.canonicity_residuals
