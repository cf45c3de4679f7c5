"""Integer elimination kernels with a compiled/pure backend switch.

The compiled extension is preferred when importable; set ``SEAWEED_PURE=1`` to
force the pure-Python twin (useful for comparison and as a safety hatch). Both
expose the same four functions and agree exactly on all inputs; the test suite
checks that.
"""
from __future__ import annotations

import os

if os.environ.get("SEAWEED_PURE"):
    from . import pure as _impl
else:
    try:
        from . import _fast as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import pure as _impl

BACKEND: str = _impl.BACKEND
det_int = _impl.det_int
echelon_int = _impl.echelon_int
rank_int = _impl.rank_int
rank_mod = _impl.rank_mod

__all__ = ["BACKEND", "det_int", "echelon_int", "rank_int", "rank_mod"]
