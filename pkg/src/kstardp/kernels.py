"""Kernel selection: compiled extension when available, pure Python otherwise.

Set KSTARDP_PURE=1 in the environment to force the pure-Python kernels.
"""

from __future__ import annotations

import os

if os.environ.get("KSTARDP_PURE"):
    from kstardp import _kernels_py as _impl
else:
    try:
        from kstardp import _kernels_c as _impl  # type: ignore[attr-defined]
    except ImportError:
        from kstardp import _kernels_py as _impl

from kstardp import _kernels_py

IMPLEMENTATION = _impl.IMPLEMENTATION

convex_hull = _impl.convex_hull
strict_interior = _impl.strict_interior
is_almost_k_hollow_pts = _impl.is_almost_k_hollow_pts
shadow_contains = _impl.shadow_contains
expand_hollow = _impl.expand_hollow
reduce_rep = _impl.reduce_rep
canonical_key = _impl.canonical_key


def arm_hollow(chain, top_num, top_den, bot_num, bot_den, k):
    # the compiled kernel rejects inputs outside its 64-bit margin
    try:
        return _impl.arm_hollow(chain, top_num, top_den, bot_num, bot_den, k)
    except OverflowError:
        return _kernels_py.arm_hollow(chain, top_num, top_den, bot_num, bot_den, k)


def triangle_hollow(a_num, a_den, l, d, k):
    try:
        return _impl.triangle_hollow(a_num, a_den, l, d, k)
    except OverflowError:
        return _kernels_py.triangle_hollow(a_num, a_den, l, d, k)
