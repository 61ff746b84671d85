"""Backend selection for the table kernels.

The compiled extension is used when it imports; set ``KLA2_PURE_PYTHON=1``
to force the pure-Python implementation.
"""
import os

from . import _pykernel

BACKEND = "python"
if not os.environ.get("KLA2_PURE_PYTHON"):
    try:
        from . import _ckernel as _impl

        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _pykernel
else:
    _impl = _pykernel

bruhat_matrix = _impl.bruhat_matrix
kl_coefficients = _impl.kl_coefficients


def backends():
    """Available backends as ``{name: module}``."""
    out = {"python": _pykernel}
    try:
        from . import _ckernel

        out["cython"] = _ckernel
    except ImportError:
        pass
    return out
