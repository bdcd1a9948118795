"""Backend selection for the brute-force kernels.

The compiled extension is used when it imports; otherwise, or when the
environment variable ``VERLINDE_PURE_PYTHON`` is set to a non-empty value,
the pure-Python module is used.  ``BACKEND`` names the active choice.
"""

import os

from . import _kernels_py

if os.environ.get("VERLINDE_PURE_PYTHON"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

count_coordinate_solutions = _impl.count_coordinate_solutions
count_pair_solutions_direct = _impl.count_pair_solutions_direct
order_phase_histogram = _impl.order_phase_histogram

IMPLEMENTATIONS = {"python": _kernels_py}
if BACKEND == "cython":
    IMPLEMENTATIONS["cython"] = _impl
