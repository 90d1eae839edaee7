"""Pure-Python enumeration kernels.

Fallback used when the compiled extension is unavailable (see kernels.py).
Both implementations expose the same functions with the same semantics:
vectors (x, y) over Z_d map to bit index ``x * d + y`` inside a little-endian
bitmask of ``(d*d + 7) // 8`` bytes.

The hot loops here lean on Python's big integers as bitsets: a whole mask is
one int, and per-row bit patterns are assembled once and shifted into place,
which keeps the pure path usable for the full verification sweeps (just
slower than the compiled one).
"""

from __future__ import annotations

import math


def mask_nbytes(d: int) -> int:
    return (d * d + 7) // 8


def _to_bytes(bits: int, d: int) -> bytes:
    return bits.to_bytes(mask_nbytes(d), "little")


def _row_patterns(d: int, b: int) -> list[int]:
    """patterns[t] has bit y set iff b*y == t (mod d)."""
    patterns = [0] * d
    for y in range(d):
        patterns[(b * y) % d] |= 1 << y
    return patterns


def perp_mask(d: int, b: int, c: int) -> bytes:
    """Bitmask of all (x, y) with c*x - b*y == 0 (mod d)."""
    patterns = _row_patterns(d, b)
    bits = 0
    for x in range(d):
        bits |= patterns[(c * x) % d] << (x * d)
    return _to_bytes(bits, d)


def perp_masks(d: int) -> list[bytes]:
    """perp_mask(d, b, c) for every vector, indexed by b*d + c."""
    out = []
    for b in range(d):
        patterns = _row_patterns(d, b)
        for c in range(d):
            bits = 0
            for x in range(d):
                bits |= patterns[(c * x) % d] << (x * d)
            out.append(_to_bytes(bits, d))
    return out


def orbit_mask(d: int, b: int, c: int) -> bytes:
    """Bitmask of the cyclic submodule {u * (b, c) : u in Z_d}."""
    bits = 0
    for u in range(d):
        bits |= 1 << (((u * b) % d) * d + (u * c) % d)
    return _to_bytes(bits, d)


def dedup_points(d: int) -> list[bytes]:
    """Orbit masks of the distinct free cyclic submodules, via plain scanning.

    Walks vectors in lexicographic order, keeps each gcd(b, c, d) == 1 vector
    that is not already covered, and marks the admissible members of its
    orbit as seen.  Serves as the enumeration-side oracle for the point
    catalog built from closed-form generators.
    """
    seen = bytearray(d * d)
    out = []
    for b in range(d):
        for c in range(d):
            if seen[b * d + c] or math.gcd(b, c, d) != 1:
                continue
            bits = 0
            for u in range(d):
                x = (u * b) % d
                y = (u * c) % d
                bits |= 1 << (x * d + y)
                if math.gcd(x, y, d) == 1:
                    seen[x * d + y] = 1
            out.append(_to_bytes(bits, d))
    return out


def union_sweep(d: int, gens: list[tuple[int, int]]) -> tuple[list[int], list[bytes]]:
    """For every vector v: how many generator orbits contain v, and their union.

    gens are the canonical point generators; returns (counts, union_masks)
    both indexed by v = b*d + c.
    """
    orbits = [int.from_bytes(orbit_mask(d, gb, gc), "little") for gb, gc in gens]
    counts = []
    masks = []
    for i in range(d * d):
        probe = 1 << i
        n = 0
        union = 0
        for orbit in orbits:
            if orbit & probe:
                n += 1
                union |= orbit
        counts.append(n)
        masks.append(_to_bytes(union, d))
    return counts, masks


def span_mask(d: int, gens: list[tuple[int, int]], cap: int) -> bytes:
    """Additive closure of the given orbits, stopped early once it reaches cap.

    The caller passes cap = |target set| when testing whether the orbits
    generate a known superset, so hitting the cap means equality.
    """
    members = [(0, 0)]
    have = {(0, 0)}
    for gb, gc in gens:
        if len(have) >= cap:
            break
        orbit = [((u * gb) % d, (u * gc) % d) for u in range(1, d)]
        if all(w in have for w in orbit):
            continue
        for sx, sy in list(members):
            if len(have) >= cap:
                break
            for ox, oy in orbit:
                t = ((sx + ox) % d, (sy + oy) % d)
                if t not in have:
                    have.add(t)
                    members.append(t)
    bits = 0
    for x, y in have:
        bits |= 1 << (x * d + y)
    return _to_bytes(bits, d)


def submodule_closed(d: int, mask: bytes) -> bool:
    """Whether the masked set is closed under addition (hence a submodule)."""
    bits = int.from_bytes(mask, "little")
    pairs = []
    t = bits
    while t:
        low = t & -t
        i = low.bit_length() - 1
        pairs.append((i // d, i % d))
        t ^= low
    for ax, ay in pairs:
        base = 0
        for bx, by in pairs:
            base |= 1 << (((ax + bx) % d) * d + (ay + by) % d)
        if base & ~bits:
            return False
    return True
