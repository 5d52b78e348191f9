"""Numba switch.

Set ``KNESERKIT_DISABLE_NUMBA=1`` (or run without numba installed) to use the
pure Python/numpy fallbacks. The flag is read once, at import time.
"""

from __future__ import annotations

import os

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

_flag = os.environ.get("KNESERKIT_DISABLE_NUMBA", "").strip().lower()
DISABLED_BY_ENV = _flag not in ("", "0", "false", "no", "off")
USE_NUMBA = numba is not None and not DISABLED_BY_ENV


def njit(func):
    """Compile ``func`` with numba when enabled; otherwise return it unchanged."""
    if not USE_NUMBA:
        return func
    return numba.njit(cache=True, nogil=True)(func)


def backend_name() -> str:
    return "numba" if USE_NUMBA else "python"
