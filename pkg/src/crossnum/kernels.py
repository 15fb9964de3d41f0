"""Kernel backend selection.

The compiled extension is used when it was built and imports cleanly;
otherwise the pure-Python module takes over.  Setting the environment
variable ``CROSSNUM_PURE_PYTHON=1`` forces the fallback.
"""
from __future__ import annotations

import os
from array import array
from itertools import combinations

from . import _pykernels

try:
    if os.environ.get("CROSSNUM_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure-Python kernels requested")
    from . import _ckernels as _impl
except ImportError:
    _impl = _pykernels

BACKEND: str = _impl.BACKEND
convex_count = _impl.convex_count
nonconvex_by_inner = _impl.nonconvex_by_inner


def compiled_available() -> bool:
    try:
        from . import _ckernels  # noqa: F401
    except ImportError:
        return False
    return True


def orientation_table(ints) -> array:
    """Flat signed-byte table of sorted-triple orientations for ``IntCoords``."""
    n = ints.n
    t = array("b", bytes(n * n * n))
    orient = ints.orient
    for i, j, k in combinations(range(n), 3):
        s = orient(i, j, k)
        if s == 0:
            from .exact_geom import DegenerateInputError

            raise DegenerateInputError(f"collinear triple {(i, j, k)}")
        t[(i * n + j) * n + k] = s
    return t
