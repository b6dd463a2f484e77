"""Kernel selection: compiled extension when importable, pure Python otherwise.

Set ``WREATHLAB_PURE=1`` to force the fallback.
"""

import os

from wreathlab import _pykernels

BACKEND = "python"
kernels = _pykernels

if os.environ.get("WREATHLAB_PURE", "") not in ("1", "true", "yes"):
    try:
        from wreathlab import _kernels as kernels  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:  # extension not built
        pass

LimitExceeded = _pykernels.LimitExceeded
