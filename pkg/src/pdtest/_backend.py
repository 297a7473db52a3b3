"""Chooses the kernel module at import time.

Set ``PDTEST_BACKEND=python`` to force the pure-Python kernels.
"""
import os

from . import _pykernels

if os.environ.get("PDTEST_BACKEND", "").lower() == "python":
    kernels = _pykernels
else:
    try:
        from . import _ckernels as kernels
    except ImportError:
        kernels = _pykernels


def available():
    """Names of the kernel modules importable in this environment."""
    names = ["python"]
    try:
        from . import _ckernels  # noqa: F401
    except ImportError:
        pass
    else:
        names.insert(0, "cython")
    return names


def get(name):
    if name == "python":
        return _pykernels
    if name == "cython":
        from . import _ckernels
        return _ckernels
    raise ValueError(f"unknown backend {name!r}")
