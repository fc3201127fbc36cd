"""Kernel selection: compiled extension when available, pure Python otherwise.

Set TRIGSHUFFLE_PURE=1 to force the pure-Python kernel (used by the
benchmark and as an escape hatch).
"""

import os

if os.environ.get("TRIGSHUFFLE_PURE") == "1":
    from . import _polycore_py as _impl
else:
    try:
        from . import _polycore_cy as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _polycore_py as _impl

IMPL = _impl.IMPL
padd = _impl.padd
psub = _impl.psub
pneg = _impl.pneg
pscale = _impl.pscale
pmul = _impl.pmul
pmul_term = _impl.pmul_term
