"""Select the colouring-search kernel at import time.

The compiled extension is used when it was built; set
``INDRAMSEY_PURE_PYTHON=1`` to force the pure-Python implementation.
"""
from __future__ import annotations

import os

from . import _kernel_py

FOUND, EXHAUSTED, BUDGET = _kernel_py.FOUND, _kernel_py.EXHAUSTED, _kernel_py.BUDGET

solve_py = _kernel_py.solve

try:
    if os.environ.get("INDRAMSEY_PURE_PYTHON"):
        raise ImportError("pure Python forced")
    from ._kernel_c import solve as solve_c
except ImportError:
    solve_c = None

if solve_c is not None:
    solve = solve_c
    BACKEND = "cython"
else:
    solve = solve_py
    BACKEND = "python"

__all__ = ["solve", "solve_py", "solve_c", "BACKEND", "FOUND", "EXHAUSTED", "BUDGET"]
