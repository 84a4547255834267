"""Kernel dispatch: the compiled extension when built, else pure Python.

The compiled path is limited to moduli below 2^63; larger moduli always
take the Python path.
"""

from __future__ import annotations

from . import _kernels_py

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

BACKEND = "compiled" if _compiled is not None else "python"

_LIMIT = 1 << 63


def _pick(p: int, e: int):
    if _compiled is not None and p**e < _LIMIT:
        return _compiled
    return _kernels_py


def central_binomials_mod(p: int, e: int, count: int) -> list[int]:
    return _pick(p, e).central_binomials_mod(p, e, count)


def convolution_mod(p: int, e: int, count: int) -> list[int]:
    return _pick(p, e).convolution_mod(p, e, count)
