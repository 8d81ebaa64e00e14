"""Backend selection for the hot loops.

The compiled extension is used when it was built; otherwise the
pure-Python twin is imported.  Set ``MORSEJONES_PURE_PYTHON=1`` to force
the fallback.
"""
import os

from . import _kernels_py

compiled = None
if not os.environ.get("MORSEJONES_PURE_PYTHON"):
    try:
        from . import _kernels as compiled
    except ImportError:
        compiled = None

_active = compiled if compiled is not None else _kernels_py

BACKEND = _active.BACKEND
sweep = _active.sweep
bruteforce_counts = _active.bruteforce_counts


def backends():
    """All importable kernel modules, keyed by name."""
    out = {"python": _kernels_py}
    if compiled is not None:
        out["cython"] = compiled
    return out
