"""Backend selection for the inner loops.

The compiled extension is used when it imports; otherwise the numpy versions
are used.  Set ``TERNARY_CODES_PURE=1`` to force the fallback.  Both backends
stay importable so tests and benchmarks can compare them, and
:func:`use_backend` switches temporarily.
"""

import os
from contextlib import contextmanager

from . import _pykernels as python_backend

try:
    from . import _kernels as compiled_backend
except ImportError:  # extension not built
    compiled_backend = None

_NAMES = ("trace_counts", "weight_histogram", "pair_sums")


def _select(name: str) -> None:
    global BACKEND, trace_counts, weight_histogram, pair_sums
    mod = {"cython": compiled_backend, "python": python_backend}[name]
    if mod is None:
        raise ImportError("compiled extension is not built")
    BACKEND = name
    trace_counts, weight_histogram, pair_sums = (getattr(mod, f) for f in _NAMES)


def available() -> list[str]:
    return ["python"] + (["cython"] if compiled_backend is not None else [])


@contextmanager
def use_backend(name: str):
    """Temporarily route every kernel call to ``name`` ("cython" or "python")."""
    previous = BACKEND
    _select(name)
    try:
        yield
    finally:
        _select(previous)


_select("cython" if compiled_backend is not None and not os.environ.get("TERNARY_CODES_PURE") else "python")
