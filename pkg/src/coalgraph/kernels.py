"""Select the compiled kernels when available, else the pure-Python ones.

Set ``COALGRAPH_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("COALGRAPH_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _kernels_py

BACKEND: str = _impl.BACKEND
canonical_order = _impl.canonical_order
search_partitions = _impl.search_partitions
walk_partitions = _kernels_py.walk_partitions
