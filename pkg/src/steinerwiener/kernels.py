"""Kernel dispatch: the compiled extension when importable, else pure Python.

Set ``STEINERWIENER_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _pykernels as python_backend

compiled_backend = None
if not os.environ.get("STEINERWIENER_PURE_PYTHON"):
    try:
        from . import _ckernels as compiled_backend  # type: ignore[no-redef]
    except ImportError:
        compiled_backend = None

BACKEND = "cython" if compiled_backend is not None else "python"
_impl = compiled_backend if compiled_backend is not None else python_backend

# bitmask kernels use 64-bit words in the compiled backend
_MASK_LIMIT = 63


def steiner_dp(dist, n, terminals):
    return _impl.steiner_dp(dist, n, list(terminals))


def is_connected_mask(adj, mask):
    if len(adj) > _MASK_LIMIT:
        return python_backend.is_connected_mask(adj, mask)
    return _impl.is_connected_mask(adj, mask)


def connected_supersets(adj, base_mask, candidates, extra):
    if len(adj) > _MASK_LIMIT:
        return python_backend.connected_supersets(adj, base_mask, list(candidates), extra)
    return _impl.connected_supersets(adj, base_mask, list(candidates), extra)


def min_connected_superset_sizes(adj, n):
    return _impl.min_connected_superset_sizes(adj, n)
