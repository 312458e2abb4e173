"""Backend selection for the polynomial reduction kernels.

The compiled extension is preferred when it imports; set SKEWRANK_PURE=1
to force the pure-Python twin.  Both expose the same module-level API and
produce bit-identical results.
"""

import os

from . import _gbcore_py

if os.environ.get("SKEWRANK_PURE") == "1":
    impl = _gbcore_py
    BACKEND = "python"
else:
    try:
        from . import _gbcore as _ext

        impl = _ext
        BACKEND = "cython"
    except ImportError:
        impl = _gbcore_py
        BACKEND = "python"


def backends():
    """All importable backends, keyed by name."""
    out = {"python": _gbcore_py}
    try:
        from . import _gbcore as _ext

        out["cython"] = _ext
    except ImportError:
        pass
    return out
