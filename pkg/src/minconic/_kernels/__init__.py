"""Kernel backend selection.

The compiled extension is used when it imported cleanly; set
MINCONIC_PURE_PYTHON=1 to force the pure-Python twin (useful for
benchmarking and for debugging suspected kernel issues).
"""
import os

from . import _py

if os.environ.get("MINCONIC_PURE_PYTHON"):
    _impl = _py
    BACKEND = "python"
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]

        BACKEND = "c"
    except ImportError:
        _impl = _py
        BACKEND = "python"

cross = _impl.cross
dot3 = _impl.dot3
det3 = _impl.det3
norm3 = _impl.norm3
solve3 = _impl.solve3
diag_triangle = _impl.diag_triangle
conic_from_pencil = _impl.conic_from_pencil
conic_from_five_points = _impl.conic_from_five_points
sym_adjugate = _impl.sym_adjugate
sym_det = _impl.sym_det
sym_eval = _impl.sym_eval

__all__ = [
    "BACKEND",
    "cross",
    "dot3",
    "det3",
    "norm3",
    "solve3",
    "diag_triangle",
    "conic_from_pencil",
    "conic_from_five_points",
    "sym_adjugate",
    "sym_det",
    "sym_eval",
]
