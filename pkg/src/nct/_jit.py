"""Switch between numba-compiled kernels and the pure numpy path.

Set ``NCT_DISABLE_NUMBA=1`` to force the fallback (useful for debugging
and for comparing the two paths in benchmarks/).
"""

import os

_DISABLED = os.environ.get("NCT_DISABLE_NUMBA", "").strip().lower() in ("1", "true", "yes")

try:
    if _DISABLED:
        raise ImportError
    from numba import njit as _njit

    HAVE_NUMBA = True
except ImportError:  # numba missing or disabled
    _njit = None
    HAVE_NUMBA = False


def njit(fn=None, **kwargs):
    """``numba.njit`` when available and enabled, otherwise a no-op decorator."""
    if not HAVE_NUMBA:
        return fn if fn is not None else (lambda f: f)
    kwargs.setdefault("cache", True)
    return _njit(fn, **kwargs) if fn is not None else _njit(**kwargs)
