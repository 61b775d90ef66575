"""Backend selection for the hot kernels.

The compiled extension is used when it imports; otherwise the pure-Python
module is used. Setting ``CATENA_PURE_PYTHON=1`` forces the fallback.
"""
from __future__ import annotations

import os

import numpy as np

from catena import _pykernels

if os.environ.get("CATENA_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from catena import _ckernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _pykernels
        BACKEND = "python"


def closure(tables: np.ndarray, member: np.ndarray) -> np.ndarray:
    return _impl.closure(
        np.ascontiguousarray(tables, dtype=np.int32),
        np.ascontiguousarray(member, dtype=np.uint8),
    )


def join_meet(leq: np.ndarray) -> tuple[np.ndarray, np.ndarray, int]:
    return _impl.join_meet(np.ascontiguousarray(leq, dtype=np.uint8))


def distributive(join: np.ndarray, meet: np.ndarray, idx) -> bool:
    return bool(_impl.distributive(join, meet, np.asarray(idx, dtype=np.int_)))


def left_modular_elements(join: np.ndarray, meet: np.ndarray, leq: np.ndarray) -> np.ndarray:
    return _impl.left_modular_elements(join, meet, np.ascontiguousarray(leq, dtype=np.uint8))


def atom_children(up) -> tuple[list[int], list[bool]]:
    return _impl.atom_children(np.ascontiguousarray(up, dtype=np.uint32))


def backends() -> dict:
    """Both kernel modules that are importable, keyed by name (for benchmarks/tests)."""
    out = {"python": _pykernels}
    try:
        from catena import _ckernels

        out["cython"] = _ckernels
    except ImportError:
        pass
    return out
