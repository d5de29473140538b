"""Assignment-problem kernel with a compiled fast path.

The Cython extension is preferred when it was built; otherwise the pure
Python implementation of the same algorithm is used. ``BACKEND`` reports
which one is active. Both produce identical matchings. Setting
``TEAMCRAFT_KERNEL=pure`` forces the fallback (useful for benchmarking and
for testing the fallback path).
"""

import os

import numpy as np

if os.environ.get("TEAMCRAFT_KERNEL") == "pure":
    from . import pure as _impl

    BACKEND = "pure"
else:
    try:
        from . import _hungarian as _impl

        BACKEND = "cython"
    except ImportError:  # extension not built
        from . import pure as _impl

        BACKEND = "pure"


def solve_min_cost(cost) -> tuple[int, list[int]]:
    """Minimum-cost perfect matching of a square non-negative int matrix.

    ``cost`` may be a nested sequence or a 2-D integer ndarray. Returns
    ``(total_cost, cols)`` with ``cols[i]`` the column matched to row ``i``.
    """
    if BACKEND == "cython":
        arr = np.ascontiguousarray(cost, dtype=np.int64)
        total, cols = _impl.solve_square(arr)
        return int(total), cols
    if isinstance(cost, np.ndarray):
        cost = [[int(x) for x in row] for row in cost]
    return _impl.solve_square(cost)
