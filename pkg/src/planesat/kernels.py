"""Backend selection for the hot kernels.

The compiled extension ``planesat._speedups`` is used when it imports and the
graph fits in 64 vertices; otherwise the pure-Python module takes over.  Set
``PLANESAT_PURE_PYTHON=1`` to force the fallback (the benchmark and the
backend-equivalence tests do this per call via ``backend=``).
"""
from __future__ import annotations

import os

from . import _purepy

try:  # pragma: no cover - depends on build
    from . import _speedups
except ImportError:  # pragma: no cover
    _speedups = None

if os.environ.get("PLANESAT_PURE_PYTHON"):
    _speedups = None

COMPILED = _speedups is not None
BACKEND = "cython" if COMPILED else "python"


def _pick(n, backend):
    if backend == "python":
        return _purepy
    if backend == "cython":
        if _speedups is None:
            raise RuntimeError("compiled kernels are not available")
        return _speedups
    if _speedups is not None and n <= 64:
        return _speedups
    return _purepy


def rotation_classes(n, adj, backend=None):
    """Distinct face-mask signatures of the genus-0 rotation systems.

    See :func:`planesat._purepy.rotation_classes`.
    """
    return _pick(n, backend).rotation_classes(n, adj)


def find_embedding(n, hadj, gadj, backend=None):
    """Bijection ``sigma`` with ``hadj`` edges mapped into ``gadj`` edges, or None."""
    hdeg = sorted((bin(m).count("1") for m in hadj), reverse=True)
    gdeg = sorted((bin(m).count("1") for m in gadj), reverse=True)
    if any(h > g for h, g in zip(hdeg, gdeg)):
        return None
    order = _purepy.search_order(n, hadj)
    return _pick(n, backend).find_embedding(n, list(hadj), list(gadj), order)
