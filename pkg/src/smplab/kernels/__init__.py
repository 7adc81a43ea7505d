"""Product-scan kernels: compiled core with a vectorized numpy fallback.

Two functions do the heavy lifting of the brute-force bounds:

``scan_classes(a, b, max_len, tie_tol)``
    Per-length best (and second-best) spectral-radius roots over one
    Lyndon representative per primitive cyclic class, plus every word
    whose root lies within ``tie_tol`` of the global best.

``norm_profile(a, b, max_len)``
    Per-length maximum of the Euclidean operator norm over all 2^k
    products, reported as k-th roots.

Matrices are passed as flat (a11, a12, a21, a22) tuples known to be
pre-scaled by the caller.  The compiled extension is used when
importable; set SMPLAB_PURE_PYTHON=1 to force the fallback.
"""

import os

from . import _fallback

if os.environ.get("SMPLAB_PURE_PYTHON"):
    _impl = _fallback
else:
    try:
        from . import _ext as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _fallback

BACKEND: str = _impl.BACKEND
scan_classes = _impl.scan_classes
norm_profile = _impl.norm_profile

__all__ = ["BACKEND", "scan_classes", "norm_profile"]
