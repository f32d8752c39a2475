"""Kernel selection: compiled extension when available, pure Python otherwise.

Set PARABOLIC_PURE_KERNEL=1 to force the pure implementation (used by the
benchmark and by CI runs without a compiler).
"""
import os

from ._kernel_py import PyWordKernel

KERNEL_IMPL = "python"
WordKernel = PyWordKernel

if not os.environ.get("PARABOLIC_PURE_KERNEL"):
    try:
        from ._kernel_c import WordKernel as _CWordKernel
    except ImportError:
        pass
    else:
        WordKernel = _CWordKernel
        KERNEL_IMPL = "c"
