"""Polynomial kernel selection.

The compiled ``_speedups`` module is used when it was built; otherwise the
pure-Python ``_pykernels`` is used.  Setting ``TETRABOX_PURE=1`` forces the
fallback.  ``BACKEND`` names the active implementation.
"""

import os

if os.environ.get("TETRABOX_PURE", "") not in ("", "0"):
    from . import _pykernels as _impl

    BACKEND = "python"
else:
    try:
        from . import _speedups as _impl

        BACKEND = "cython"
    except ImportError:  # extension not built
        from . import _pykernels as _impl

        BACKEND = "python"

trim = _impl.trim
add = _impl.add
sub = _impl.sub
neg = _impl.neg
scale = _impl.scale
mul = _impl.mul
divmod_ = _impl.divmod_
divide_linear = _impl.divide_linear
evaluate = _impl.evaluate
shift = _impl.shift

__all__ = [
    "BACKEND",
    "trim",
    "add",
    "sub",
    "neg",
    "scale",
    "mul",
    "divmod_",
    "divide_linear",
    "evaluate",
    "shift",
]
