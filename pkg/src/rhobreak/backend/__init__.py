"""Numeric kernel dispatch.

The hot inner loops (prefix correlation paths, kernel-weighted lag sums) come
in two interchangeable flavors: a numba-jitted one and a pure-numpy one. The
active flavor is chosen from the ``RHOBREAK_BACKEND`` environment variable
("numba", "numpy", or "auto"); "auto" prefers numba when it imports cleanly.
"""
import os

from . import numpy_impl

try:
    from . import numba_impl
except ImportError:  # pragma: no cover - numba present in normal installs
    numba_impl = None

_IMPLS = {"numpy": numpy_impl}
if numba_impl is not None:
    _IMPLS["numba"] = numba_impl


def _resolve(name: str):
    if name == "auto":
        return _IMPLS.get("numba", numpy_impl)
    try:
        return _IMPLS[name]
    except KeyError:
        available = ", ".join(sorted([*_IMPLS, "auto"]))
        raise ValueError(
            f"unknown backend {name!r} (RHOBREAK_BACKEND); expected one of: {available}"
        ) from None


_active = _resolve(os.environ.get("RHOBREAK_BACKEND", "auto").strip().lower() or "auto")


def backend_name() -> str:
    """Name of the implementation currently answering kernel calls."""
    return _active.NAME


def set_backend(name: str) -> None:
    """Switch kernel implementation at runtime ("numba", "numpy", "auto")."""
    global _active
    _active = _resolve(name)


def spearman_prefix(products, h, scale):
    return _active.spearman_prefix(products, h, scale)


def hac_core(x, weights, mean):
    return _active.hac_core(x, weights, mean)


def pearson_prefix(x, y):
    return _active.pearson_prefix(x, y)
