"""Kernel backend selection.

The compiled Cython kernel is used when its extension module imported
successfully; otherwise the pure-Python big-int kernel takes over.  Setting
RSBF_KERNEL=python forces the fallback (used by tests and the benchmark).
"""
import os

from rsbf import _kernel_py

try:
    from rsbf import _kernel_cy
except ImportError:
    _kernel_cy = None

if os.environ.get("RSBF_KERNEL") == "python" or _kernel_cy is None:
    chunk_xor_popcount = _kernel_py.chunk_xor_popcount
    BACKEND = "python"
else:
    chunk_xor_popcount = _kernel_cy.chunk_xor_popcount
    BACKEND = "cython"


def available_backends():
    """Name -> kernel function, for everything importable in this process."""
    out = {"python": _kernel_py.chunk_xor_popcount}
    if _kernel_cy is not None:
        out["cython"] = _kernel_cy.chunk_xor_popcount
    return out
