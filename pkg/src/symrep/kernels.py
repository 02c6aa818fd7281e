"""Hot-kernel dispatch: compiled extension when built, pure Python otherwise.

Set ``SYMREP_PURE_PYTHON=1`` to force the fallback.  Inputs wider than 64
bits always take the Python path.
"""
from __future__ import annotations

import os
from typing import Sequence

from . import _pykernels

_compiled = None
if os.environ.get("SYMREP_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _compiled  # type: ignore[no-redef]
    except ImportError:
        _compiled = None

BACKEND = _compiled.BACKEND if _compiled is not None else _pykernels.BACKEND


def available_backends() -> dict:
    out = {"python": _pykernels}
    if _compiled is not None:
        out["cython"] = _compiled
    return out


def _pick(width: int, backend: str | None):
    if backend is not None:
        return available_backends()[backend]
    if _compiled is not None and width <= 64:
        return _compiled
    return _pykernels


def copy_masks(
    host_rows: Sequence[int],
    pattern_rows: Sequence[int],
    order: Sequence[int],
    induced: bool = False,
    first_only: bool = False,
    backend: str | None = None,
) -> list[int]:
    impl = _pick(max(len(host_rows), len(order)), backend)
    return impl.copy_masks(list(host_rows), list(pattern_rows), list(order), induced, first_only)


drop_supersets = _pykernels.drop_supersets
greedy_cover = _pykernels.greedy_cover


def min_weighted_hitting(
    weights: Sequence[int], members: Sequence[int], backend: str | None = None
) -> tuple[int, int]:
    """Exact ``(cost, mask)`` of a minimum-weight set meeting every member mask."""
    if not members:
        return 0, 0
    if any(m == 0 for m in members):
        raise ValueError("an empty member cannot be hit")
    return _pick(len(weights), backend).min_weighted_hitting(list(weights), list(members))
