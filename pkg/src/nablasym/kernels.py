"""Kernel selection: the compiled module when available, else pure Python.

Set NABLASYM_PURE_PYTHON=1 to force the fallback.
"""

import os

from ._pykernels import car_assignments, hhl_tables, pf_stats_raw

BACKEND = "python"

if os.environ.get("NABLASYM_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from ._ckernels import hhl_histogram, pf_path_histogram
        BACKEND = "cython"
    except ImportError:
        pass

if BACKEND == "python":
    from ._pykernels import hhl_histogram, pf_path_histogram

__all__ = ["BACKEND", "car_assignments", "hhl_histogram", "hhl_tables",
           "pf_path_histogram", "pf_stats_raw"]
