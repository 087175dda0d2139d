"""Kernel dispatch: compiled extension when available, numpy fallback otherwise.

Set PCRANK_PURE_PYTHON=1 to force the fallback (used by the benchmark and to
test backend agreement).
"""

import os

from . import _kernels_py

if os.environ.get("PCRANK_PURE_PYTHON"):
    _impl = _kernels_py
    HAVE_SPEEDUPS = False
else:
    try:
        from . import _speedups as _impl
        HAVE_SPEEDUPS = True
    except ImportError:
        _impl = _kernels_py
        HAVE_SPEEDUPS = False

triad_stats = _impl.triad_stats
count_admissible = _impl.count_admissible
BACKEND = "compiled" if HAVE_SPEEDUPS else "pure-python"
