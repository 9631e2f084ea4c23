"""Pick the integer kernel implementation once, at import time.

The compiled ``_speedups`` module is used when it was built; setting
``CEVCONIC_PURE_PYTHON=1`` forces the pure-Python fallback.
"""

import os

NAMES = ("canon", "canon3", "cross", "dot", "det3", "matdet", "matvec",
         "rawmatmul", "matmul", "adjugate", "transpose", "congruence",
         "bilinear", "quad", "nullspace")


def load(pure=False):
    """Return the kernel module, compiled unless ``pure`` or unavailable."""
    if not pure:
        try:
            from cevconic import _speedups
            return _speedups
        except ImportError:
            pass
    from cevconic import _purekernel
    return _purekernel


_impl = load(pure=os.environ.get("CEVCONIC_PURE_PYTHON", "") not in ("", "0"))
BACKEND = "compiled" if _impl.__name__.endswith("_speedups") else "python"

canon = _impl.canon
canon3 = _impl.canon3
cross = _impl.cross
dot = _impl.dot
det3 = _impl.det3
matdet = _impl.matdet
matvec = _impl.matvec
rawmatmul = _impl.rawmatmul
matmul = _impl.matmul
adjugate = _impl.adjugate
transpose = _impl.transpose
congruence = _impl.congruence
bilinear = _impl.bilinear
quad = _impl.quad
nullspace = _impl.nullspace
