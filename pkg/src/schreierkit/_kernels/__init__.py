"""Hot kernels: compiled Cython extension with a pure-Python fallback.

The compiled module is used when it has been built (``pip install -e .``)
unless ``SCHREIERKIT_PURE=1`` is set in the environment.  ``BACKEND`` names
the implementation in use.
"""

import os

from . import _pure

if os.environ.get("SCHREIERKIT_PURE", "") not in ("", "0"):
    _impl = _pure
else:
    try:
        from . import _fast as _impl
    except ImportError:
        _impl = _pure

BACKEND = "cython" if _impl is not _pure else "python"

fold = _impl.fold
canonical_tuples = _impl.canonical_tuples
closure = _impl.closure

__all__ = ["BACKEND", "fold", "canonical_tuples", "closure"]
