"""Kernel selection: the compiled extension when built, else pure Python.

Set ``FROBW_PURE_PYTHON=1`` to force the fallback.
"""

import os

BACKEND = "python"

if os.environ.get("FROBW_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from ._kernels import insert_row, reduce_vector, rref_int  # noqa: F401

        BACKEND = "cython"
    except ImportError:
        pass

if BACKEND == "python":
    from ._kernels_py import insert_row, reduce_vector, rref_int  # noqa: F401

__all__ = ["BACKEND", "insert_row", "reduce_vector", "rref_int"]
