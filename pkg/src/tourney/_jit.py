"""JIT plumbing: numba when available and wanted, plain Python otherwise.

Kernel modules decorate their hot loops with ``@njit(cache=True)`` imported from
here.  Setting TOURNEY_JIT=0 (or missing numba, or NUMBA_DISABLE_JIT=1) turns the
decorator into a no-op so the same source runs interpreted on the same numpy
arrays.  The flag is read once at import.
"""
from __future__ import annotations

import os


def _jit_wanted() -> bool:
    if os.environ.get("TOURNEY_JIT", "").strip() == "0":
        return False
    if os.environ.get("NUMBA_DISABLE_JIT", "").strip() == "1":
        return False
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


JIT_ENABLED = _jit_wanted()

if JIT_ENABLED:
    from numba import njit
else:

    def njit(*args, **kwargs):
        # mirror numba's decorator signature: bare @njit or @njit(cache=True)
        if args and callable(args[0]):
            return args[0]

        def wrap(func):
            return func

        return wrap
