"""Optional numba acceleration.

Set ``SICIGAMMA_NUMBA=0`` to force the pure-numpy kernels even when numba is
installed. The flag is read once at import time.
"""

import os

ENV_FLAG = "SICIGAMMA_NUMBA"


def _flag_enabled():
    raw = os.environ.get(ENV_FLAG, "1").strip().lower()
    return raw not in {"0", "false", "no", "off"}


try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is optional
    numba = None
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and _flag_enabled()


def njit(func):
    """Compile ``func`` with numba when available, else return it unchanged."""
    if HAVE_NUMBA:
        return numba.njit(cache=True, nogil=True)(func)
    return func
