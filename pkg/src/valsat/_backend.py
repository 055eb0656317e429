"""Kernel selection: compiled extension when importable, else the pure twin.

Set ``VALSAT_PURE=1`` to force the pure-Python kernel (used by the
benchmark to time both sides, and as an escape hatch on broken builds).
"""

import os

from . import _ratkernel

if os.environ.get("VALSAT_PURE"):
    impl = _ratkernel
    name = "pure"
else:
    try:
        from . import _speedups as impl  # type: ignore[no-redef]

        name = "speedups"
    except ImportError:
        impl = _ratkernel
        name = "pure"


def kernel():
    return impl


def kernel_name() -> str:
    return name
