"""Hot scan kernels with backend selection at import time.

The compiled extension `jumplines._fastkern` is preferred; the pure-Python
twin in `jumplines.kernels.pure` is the fallback.  Set JUMPLINES_PURE=1 to
force the fallback (useful for the backend-equivalence tests and for the
benchmark).
"""

from __future__ import annotations

import os

from . import pure as _pure

if os.environ.get("JUMPLINES_PURE") == "1":
    _impl = _pure
else:
    try:
        from jumplines import _fastkern as _impl  # type: ignore
    except ImportError:
        _impl = _pure

BACKEND: str = _impl.BACKEND

rank_mod_p = _impl.rank_mod_p
pencil_kernel_degrees = _impl.pencil_kernel_degrees
splitting_scan = _impl.splitting_scan
eval_form_many = _impl.eval_form_many


def backends():
    """All importable backends, for tests and benchmarks."""
    out = {"pure": _pure}
    try:
        from jumplines import _fastkern  # type: ignore

        out["compiled"] = _fastkern
    except ImportError:
        pass
    return out
