"""Kernel backend selection and small mask helpers.

The enumeration-heavy primitives live in two interchangeable modules: a
compiled Cython extension (_kernels) and a pure-Python twin (_kernels_py).
This module picks one at import time -- the extension when it is available,
the pure twin otherwise -- and re-exports the shared surface.  Set
``QUDITLINE_PURE=1`` in the environment to force the fallback, e.g. for
benchmarking or debugging.

Mask convention (both backends): vector (x, y) over Z_d is bit ``x * d + y``
of a little-endian bitmask of ``(d*d + 7) // 8`` bytes.
"""

from __future__ import annotations

import os
from typing import Iterator

if os.environ.get("QUDITLINE_PURE"):
    from . import _kernels_py as _impl

    BACKEND = "pure"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _kernels_py as _impl

        BACKEND = "pure"

perp_mask = _impl.perp_mask
perp_masks = _impl.perp_masks
orbit_mask = _impl.orbit_mask
dedup_points = _impl.dedup_points
union_sweep = _impl.union_sweep
span_mask = _impl.span_mask
submodule_closed = _impl.submodule_closed


def mask_nbytes(d: int) -> int:
    return (d * d + 7) // 8


def mask_bits(mask: bytes) -> int:
    """The mask as a Python int bitset."""
    return int.from_bytes(mask, "little")


def popcount(mask: bytes) -> int:
    return int.from_bytes(mask, "little").bit_count()


def mask_contains(mask: bytes, d: int, x: int, y: int) -> bool:
    i = x * d + y
    return (mask[i >> 3] >> (i & 7)) & 1 == 1


def mask_subset(inner: bytes, outer: bytes) -> bool:
    a = int.from_bytes(inner, "little")
    b = int.from_bytes(outer, "little")
    return a & ~b == 0


def iter_mask(mask: bytes, d: int) -> Iterator[tuple[int, int]]:
    """Yield the (x, y) pairs of set bits in index order."""
    bits = int.from_bytes(mask, "little")
    while bits:
        low = bits & -bits
        i = low.bit_length() - 1
        yield i // d, i % d
        bits ^= low


def mask_from_pairs(pairs, d: int) -> bytes:
    bits = 0
    for x, y in pairs:
        bits |= 1 << (x * d + y)
    return bits.to_bytes(mask_nbytes(d), "little")
