"""Select the search kernel: compiled extension if available, else pure Python.

Set ``VMOSAIC_PURE=1`` to force the pure-Python kernel.
"""
import os

from . import _core_py

core = _core_py
BACKEND = "python"
if os.environ.get("VMOSAIC_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _core as core  # noqa: F811
        BACKEND = "cython"
    except ImportError:
        pass
