"""Kernel backend selection.

The compiled Cython kernel is used when its extension module imports; the
pure-Python kernel is the fallback.  Set ``GA3_PURE=1`` in the environment to
force the fallback (the benchmark uses this to compare the two).
"""

import os

from . import _tables

if os.environ.get("GA3_PURE"):
    from . import _kernels_py as _impl

    BACKEND = "pure"
else:
    try:
        from . import _kernels_cy as _impl  # type: ignore[no-redef]

        _impl.load_tables(_tables.MUL_SLOT, _tables.MUL_SIGN)
        BACKEND = "compiled"
    except ImportError:
        from . import _kernels_py as _impl  # type: ignore[no-redef]

        BACKEND = "pure"

gp = _impl.gp
