"""Kernel selection: the compiled extension when importable, otherwise pure Python.

Set ``PRETZEL_BRAID_PURE=1`` to force the pure-Python kernels.
"""
import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels
if os.environ.get("PRETZEL_BRAID_PURE", "") in ("", "0"):
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]
        BACKEND = "compiled"
    except ImportError:
        _impl = _pykernels

state_histogram = _impl.state_histogram
tl_apply = _impl.tl_apply
contract_histogram = _pykernels.contract_histogram
