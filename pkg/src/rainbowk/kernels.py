"""Kernel backend selection.

The compiled extension is used when it imports; ``RAINBOWK_PURE_PYTHON=1``
forces the pure-Python fallback.
"""

from __future__ import annotations

import os

import numpy as np

from rainbowk import _pykernels

_compiled = None
if not os.environ.get("RAINBOWK_PURE_PYTHON"):
    try:
        from rainbowk import _ckernels as _compiled
    except ImportError:
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"
BACKENDS = {"python": _pykernels}
if _compiled is not None:
    BACKENDS["cython"] = _compiled
_impl = _compiled if _compiled is not None else _pykernels


def _as_colors(col: np.ndarray) -> np.ndarray:
    return np.ascontiguousarray(col, dtype=np.int8)


def two_color_table(col: np.ndarray, backend: str | None = None) -> np.ndarray:
    impl = BACKENDS[backend] if backend else _impl
    return impl.two_color_table(_as_colors(col))


def rainbow_paths(col: np.ndarray, u: int, v: int, max_len: int,
                  backend: str | None = None) -> list[tuple[int, ...]]:
    impl = BACKENDS[backend] if backend else _impl
    return impl.rainbow_paths(_as_colors(col), int(u), int(v), int(max_len))
