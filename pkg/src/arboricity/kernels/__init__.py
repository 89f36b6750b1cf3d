"""Kernel selection: compiled extension when available, pure Python otherwise.

``active()`` returns the module currently in use.  Tests and benchmarks can
pin a kernel with ``use("pure")`` / ``use("fast")``; normal code never needs
to.  Both kernels expose the same ``sweep`` function and produce identical
results; the compiled one is one to two orders of magnitude faster.
"""

from __future__ import annotations

from types import ModuleType

from . import pure

try:  # pragma: no cover - exercised only when the extension is built
    from . import _fastflow as fast
except ImportError:  # pragma: no cover
    fast = None

_active: ModuleType = fast if fast is not None else pure


def available() -> list[str]:
    names = ["pure"]
    if fast is not None:
        names.append("fast")
    return names


def active() -> ModuleType:
    return _active


def use(name: str) -> ModuleType:
    """Select a kernel by name ("pure" or "fast"); returns the module."""
    global _active
    if name == "pure":
        _active = pure
    elif name == "fast":
        if fast is None:
            raise RuntimeError("compiled kernel is not available")
        _active = fast
    else:
        raise ValueError(f"unknown kernel {name!r}")
    return _active


def sweep(n, us, vs, p, q):
    """Dispatch to the active kernel."""
    return _active.sweep(n, us, vs, p, q)
