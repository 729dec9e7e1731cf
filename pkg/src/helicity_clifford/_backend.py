"""Select the compiled kernels when available, else the numpy fallback."""

import os

from . import _fallback

if os.environ.get("HELICITY_CLIFFORD_PURE", "") not in ("", "0"):
    kernels = _fallback
    BACKEND = "python"
else:
    try:
        from . import _kernels as kernels  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        kernels = _fallback
        BACKEND = "python"

fallback = _fallback
