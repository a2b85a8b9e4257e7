"""Finite-field row-reduction kernels.

The compiled ``_gf_cy`` extension is used when it was built; otherwise the
pure-Python ``_gf_py`` module is used.  Set ``BTSTRATA_KERNEL=python`` to
force the fallback.  ``BACKEND`` names the active implementation.
"""

import os

from . import _gf_py

_forced = os.environ.get("BTSTRATA_KERNEL", "").strip().lower()

if _forced == "python":
    _impl = _gf_py
else:
    try:
        from . import _gf_cy as _impl
    except ImportError:
        if _forced == "cython":
            raise
        _impl = _gf_py

BACKEND = "cython" if _impl is not _gf_py else "python"

Tables = _impl.Tables
rref = _impl.rref
rank = _impl.rank
lagrangian_profile = _impl.lagrangian_profile


def available_backends():
    """Map of backend name to module for every importable implementation."""
    out = {"python": _gf_py}
    try:
        from . import _gf_cy
        out["cython"] = _gf_cy
    except ImportError:
        pass
    return out
