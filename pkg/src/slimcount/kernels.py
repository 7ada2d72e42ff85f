"""Backend selection for the hot kernels.

The compiled module is used when it was built; setting the environment
variable ``SLIMCOUNT_PURE=1`` forces the pure-Python fallback.
"""
import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if os.environ.get("SLIMCOUNT_PURE", "") in ("", "0"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]
        BACKEND = "cython"
    except ImportError:
        pass

inversions = _impl.inversions
contains_321 = _impl.contains_321
segment_cuts = _impl.segment_cuts
is_involution = _impl.is_involution
inverse = _impl.inverse
grid_blocks = _impl.grid_blocks

__all__ = ["BACKEND", "inversions", "contains_321", "segment_cuts",
           "is_involution", "inverse", "grid_blocks"]
