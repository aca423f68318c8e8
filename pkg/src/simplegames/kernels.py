"""Hot bitmask kernels, compiled when available.

The Cython build (``simplegames._ckernels``) is used if it imports; otherwise,
or when ``SIMPLEGAMES_PURE_PYTHON=1`` is set, the pure-Python versions in
``simplegames._pykernels`` are used.  Both expose the same three functions
with identical outputs.
"""

import os

from simplegames import _pykernels

if os.environ.get("SIMPLEGAMES_PURE_PYTHON") == "1":
    _impl = _pykernels
else:
    try:
        from simplegames import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = "python" if _impl is _pykernels else "cython"

determining_strings = _impl.determining_strings
subset_certificates = _impl.subset_certificates
min_empty_intersection = _impl.min_empty_intersection


def backends():
    """Mapping of every importable backend name to its module."""
    found = {"python": _pykernels}
    try:
        from simplegames import _ckernels
    except ImportError:
        pass
    else:
        found["cython"] = _ckernels
    return found
