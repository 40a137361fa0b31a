"""Backend selection for the computational kernels.

The compiled extension is preferred when it has been built; otherwise the
pure-Python module provides identical behaviour.  Set the environment
variable ``SOFTGROUPS_PURE=1`` before import to force the pure backend (the
parity tests and the benchmark script rely on this).
"""

import os

if os.environ.get("SOFTGROUPS_PURE"):
    from . import _core_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _core_c as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        from . import _core_py as _impl

        BACKEND = "python"

compose_windows = _impl.compose_windows
inverse_window = _impl.inverse_window
closure = _impl.closure
multiplication_table = _impl.multiplication_table
inverse_indices = _impl.inverse_indices
hom_violation = _impl.hom_violation
enumerate_hom_tables = _impl.enumerate_hom_tables

__all__ = [
    "BACKEND",
    "compose_windows",
    "inverse_window",
    "closure",
    "multiplication_table",
    "inverse_indices",
    "hom_violation",
    "enumerate_hom_tables",
]
