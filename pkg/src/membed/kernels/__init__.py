"""Kernel dispatch: compiled extension when available, NumPy fallback otherwise.

Set ``MEMBED_NO_EXT=1`` to force the fallback (useful for benchmarking and
for debugging suspected extension issues).
"""

import os

from . import _fallback

if os.environ.get("MEMBED_NO_EXT", "").strip() not in ("", "0"):
    _impl = _fallback
else:
    try:
        from . import _speedups as _impl
    except ImportError:
        _impl = _fallback

BACKEND = _impl.BACKEND


def backend() -> str:
    """Name of the active kernel backend ('cython' or 'numpy')."""
    return BACKEND


csr_matvec = _impl.csr_matvec
rk4_csr_steps = _impl.rk4_csr_steps
rk4_dense_steps = _impl.rk4_dense_steps

__all__ = ["backend", "BACKEND", "csr_matvec", "rk4_csr_steps", "rk4_dense_steps"]
