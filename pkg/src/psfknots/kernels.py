"""Letter kernels, compiled when available.

The Cython build of ``_kernels`` is preferred; the pure-Python twin is used
when the extension is missing or ``PSFKNOTS_PURE=1`` is set.  ``BACKEND``
names the active implementation.
"""

import os

from . import _kernels_py as pure

if os.environ.get("PSFKNOTS_PURE", "") not in ("", "0"):
    _impl = pure
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = pure

BACKEND = "pure" if _impl is pure else "cython"

reduce_letters = _impl.reduce_letters
cyclic_core = _impl.cyclic_core
image_cyclic = _impl.image_cyclic
image_cyclic_length = _impl.image_cyclic_length
minimize_letters = _impl.minimize_letters


def compiled():
    """Return the compiled module, or None when it was not built."""
    try:
        from . import _kernels
    except ImportError:
        return None
    return _kernels
