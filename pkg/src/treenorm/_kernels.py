"""Select the compiled kernels when available, else the pure-Python ones.

Set ``TREENORM_PURE_PYTHON=1`` to force the fallback.
"""
from __future__ import annotations

import os

from treenorm import _pykernels

BACKEND = "python"
_impl = _pykernels

if not os.environ.get("TREENORM_PURE_PYTHON"):
    try:
        from treenorm import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        pass

all_pairs = _impl.all_pairs
ecc_norm = _impl.ecc_norm
prufer_class_codes = _impl.prufer_class_codes
