"""Hot numeric kernels: numba-compiled by default, pure Python on demand.

Set ``TRICRIT_PURE=1`` in the environment to skip numba and run the very
same source uncompiled (slow, dependency-free, bit-identical results).
The flag is read once at import time. ``benchmarks/bench_kernels.py``
compares the two paths.
"""

from __future__ import annotations

import os

PURE_ENV_FLAG = "TRICRIT_PURE"


def _pure_requested() -> bool:
    return os.environ.get(PURE_ENV_FLAG, "").strip().lower() in {"1", "true", "yes"}


USING_NUMBA = False
if not _pure_requested():
    try:
        from numba import njit as _njit

        USING_NUMBA = True
    except ImportError:  # pragma: no cover - numba is a declared dependency
        USING_NUMBA = False

if USING_NUMBA:

    def jit(fn):
        return _njit(cache=True)(fn)

else:

    def jit(fn):
        return fn


from .backtrack import count_colorings, enumerate_partitions  # noqa: E402
from .canonical import canonical_order  # noqa: E402

__all__ = [
    "USING_NUMBA",
    "PURE_ENV_FLAG",
    "jit",
    "count_colorings",
    "enumerate_partitions",
    "canonical_order",
]
