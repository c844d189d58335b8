"""Kernel backend selection: compiled extension if available, else Python.

Both kernels expose the same ``min_pages`` contract and return identical
values; the compiled one is just fast enough to make the exact oracle
pleasant at the size guard.  ``benchmarks/bench_kernels.py`` measures the
difference.
"""

from __future__ import annotations

from types import ModuleType

from . import _pykernel

try:  # pragma: no cover - exercised implicitly by whichever build is present
    from . import _ckernel  # type: ignore[attr-defined]
except ImportError:  # pragma: no cover
    _ckernel = None  # type: ignore[assignment]

ACTIVE: ModuleType = _ckernel if _ckernel is not None else _pykernel


def active_name() -> str:
    return ACTIVE.NAME


def available() -> dict[str, ModuleType]:
    """Importable kernels by name (always includes the Python fallback)."""
    out: dict[str, ModuleType] = {_pykernel.NAME: _pykernel}
    if _ckernel is not None:
        out[_ckernel.NAME] = _ckernel
    return out
