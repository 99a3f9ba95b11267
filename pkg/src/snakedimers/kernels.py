"""Backend selection for the cover-search kernels.

The compiled ``_ckernels`` extension is used when it was built; otherwise,
or when ``SNAKEDIMERS_PURE_PYTHON`` is set, the ``_pykernels`` fallback is.
"""
import os

from . import _pykernels

if os.environ.get("SNAKEDIMERS_PURE_PYTHON"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = "cython" if _impl is not _pykernels else "python"

count_covers = _impl.count_covers
enumerate_covers = _impl.enumerate_covers

__all__ = ["BACKEND", "count_covers", "enumerate_covers"]
