"""Kernel backend selection.

The hot inner loops (element closure, conjugacy partition, element
orders, Cayley tables, index-set closure) exist twice: a numba-jitted
version in ``_kernels_numba`` and a vectorised numpy fallback in
``_kernels_np``.  Both produce bit-identical results.

Selection is controlled by the ``COGROUPS_BACKEND`` environment
variable: ``numba``, ``numpy``, or unset (numba when importable,
numpy otherwise).  The choice is made once, on first use.
"""

import os

_active = None


def backend():
    global _active
    if _active is None:
        _active = _load(os.environ.get("COGROUPS_BACKEND"))
    return _active


def backend_name():
    return backend().NAME


def _load(name):
    name = (name or "auto").strip().lower()
    if name not in ("auto", "numba", "numpy"):
        raise ValueError(
            f"COGROUPS_BACKEND must be 'numba' or 'numpy', got {name!r}"
        )
    if name in ("auto", "numba"):
        try:
            from . import _kernels_numba
            return _kernels_numba
        except ImportError:
            if name == "numba":
                raise
    from . import _kernels_np
    return _kernels_np
