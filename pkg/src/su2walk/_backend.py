"""Select the compiled kernels when available, else the numpy fallback.

Set ``SU2WALK_PURE_PYTHON=1`` to force the fallback.
"""
import os

if os.environ.get("SU2WALK_PURE_PYTHON"):
    from su2walk import _kernels_py as kernels

    BACKEND = "python"
else:
    try:
        from su2walk import _kernels as kernels

        BACKEND = "cython"
    except ImportError:
        from su2walk import _kernels_py as kernels

        BACKEND = "python"

__all__ = ["kernels", "BACKEND"]
