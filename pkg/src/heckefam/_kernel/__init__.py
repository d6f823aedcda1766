"""Kernel selection: compiled extension when available, pure Python otherwise.

Set HECKEFAM_PURE=1 to force the pure-Python kernels (used by the benchmark
to time both implementations in one process via explicit imports).
"""

from __future__ import annotations

import os

from . import pure

if os.environ.get("HECKEFAM_PURE"):
    _impl = pure
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = pure

IMPLEMENTATION = _impl.IMPLEMENTATION
add_maps = _impl.add_maps
scale_map = _impl.scale_map
reduce_map = _impl.reduce_map
mul_reduce = _impl.mul_reduce

__all__ = ["IMPLEMENTATION", "add_maps", "scale_map", "reduce_map", "mul_reduce", "pure"]
