# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels.

Same contract as _kernels_py.py: vector (x, y) over Z_d is bit x * d + y of
a little-endian mask of (d*d + 7) // 8 bytes.  quditline.kernels picks this
module when it imported successfully and the pure twin otherwise, so the two
must stay behaviorally identical -- the test suite compares them bit for bit.
"""

from libc.stdlib cimport calloc, free, malloc
from libc.string cimport memset


cdef inline Py_ssize_t _nbytes(Py_ssize_t d) noexcept:
    return (d * d + 7) >> 3


cdef inline Py_ssize_t _nwords(Py_ssize_t d) noexcept:
    return (d * d + 63) >> 6


cdef inline void _set_bit(unsigned long long *buf, Py_ssize_t i) noexcept:
    buf[i >> 6] |= (<unsigned long long> 1) << (i & 63)


cdef inline bint _get_bit(const unsigned long long *buf, Py_ssize_t i) noexcept:
    return (buf[i >> 6] >> (i & 63)) & 1


cdef inline Py_ssize_t _gcd2(Py_ssize_t a, Py_ssize_t b) noexcept:
    cdef Py_ssize_t t
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef bytes _serialize(const unsigned long long *words, Py_ssize_t d):
    # little-endian bytes, independent of host endianness
    cdef Py_ssize_t nb = _nbytes(d)
    cdef bytearray out = bytearray(nb)
    cdef unsigned char[::1] view = out
    cdef Py_ssize_t j
    for j in range(nb):
        view[j] = <unsigned char> ((words[j >> 3] >> ((j & 7) << 3)) & 0xFF)
    return bytes(out)


cdef int _fill_perp(Py_ssize_t d, Py_ssize_t b, Py_ssize_t c,
                    unsigned long long *words, Py_ssize_t *starts,
                    Py_ssize_t *items, Py_ssize_t *scratch) except -1:
    # counting sort of y by key (b*y) % d, then splice the matching rows
    cdef Py_ssize_t y, x, t, j
    memset(words, 0, _nwords(d) * sizeof(unsigned long long))
    for t in range(d + 1):
        starts[t] = 0
    for y in range(d):
        starts[(b * y) % d + 1] += 1
    for t in range(d):
        starts[t + 1] += starts[t]
    for t in range(d):
        scratch[t] = starts[t]
    for y in range(d):
        t = (b * y) % d
        items[scratch[t]] = y
        scratch[t] += 1
    for x in range(d):
        t = (c * x) % d
        for j in range(starts[t], starts[t + 1]):
            _set_bit(words, x * d + items[j])
    return 0


def perp_mask(Py_ssize_t d, Py_ssize_t b, Py_ssize_t c):
    """Bitmask of all (x, y) with c*x - b*y == 0 (mod d)."""
    cdef unsigned long long *words = <unsigned long long *> malloc(
        _nwords(d) * sizeof(unsigned long long))
    cdef Py_ssize_t *starts = <Py_ssize_t *> malloc((d + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t *items = <Py_ssize_t *> malloc(d * sizeof(Py_ssize_t))
    cdef Py_ssize_t *scratch = <Py_ssize_t *> malloc(d * sizeof(Py_ssize_t))
    if words == NULL or starts == NULL or items == NULL or scratch == NULL:
        free(words); free(starts); free(items); free(scratch)
        raise MemoryError()
    try:
        _fill_perp(d, b % d, c % d, words, starts, items, scratch)
        return _serialize(words, d)
    finally:
        free(words); free(starts); free(items); free(scratch)


def perp_masks(Py_ssize_t d):
    """perp_mask(d, b, c) for every vector, indexed by b*d + c."""
    cdef unsigned long long *words = <unsigned long long *> malloc(
        _nwords(d) * sizeof(unsigned long long))
    cdef Py_ssize_t *starts = <Py_ssize_t *> malloc((d + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t *items = <Py_ssize_t *> malloc(d * sizeof(Py_ssize_t))
    cdef Py_ssize_t *scratch = <Py_ssize_t *> malloc(d * sizeof(Py_ssize_t))
    if words == NULL or starts == NULL or items == NULL or scratch == NULL:
        free(words); free(starts); free(items); free(scratch)
        raise MemoryError()
    cdef list out = []
    cdef Py_ssize_t b, c
    try:
        for b in range(d):
            for c in range(d):
                _fill_perp(d, b, c, words, starts, items, scratch)
                out.append(_serialize(words, d))
        return out
    finally:
        free(words); free(starts); free(items); free(scratch)


cdef void _fill_orbit(Py_ssize_t d, Py_ssize_t b, Py_ssize_t c,
                      unsigned long long *words) noexcept:
    cdef Py_ssize_t u, x, y
    memset(words, 0, _nwords(d) * sizeof(unsigned long long))
    x = 0
    y = 0
    for u in range(d):
        _set_bit(words, x * d + y)
        x = (x + b) % d
        y = (y + c) % d


def orbit_mask(Py_ssize_t d, Py_ssize_t b, Py_ssize_t c):
    """Bitmask of the cyclic submodule {u * (b, c) : u in Z_d}."""
    cdef unsigned long long *words = <unsigned long long *> malloc(
        _nwords(d) * sizeof(unsigned long long))
    if words == NULL:
        raise MemoryError()
    try:
        _fill_orbit(d, b % d, c % d, words)
        return _serialize(words, d)
    finally:
        free(words)


def dedup_points(Py_ssize_t d):
    """Orbit masks of the distinct free cyclic submodules, by plain scanning."""
    cdef unsigned char *seen = <unsigned char *> calloc(d * d, 1)
    cdef unsigned long long *words = <unsigned long long *> malloc(
        _nwords(d) * sizeof(unsigned long long))
    if seen == NULL or words == NULL:
        free(seen); free(words)
        raise MemoryError()
    cdef list out = []
    cdef Py_ssize_t b, c, u, x, y
    try:
        for b in range(d):
            for c in range(d):
                if seen[b * d + c] or _gcd2(_gcd2(b, c), d) != 1:
                    continue
                memset(words, 0, _nwords(d) * sizeof(unsigned long long))
                x = 0
                y = 0
                for u in range(d):
                    _set_bit(words, x * d + y)
                    if _gcd2(_gcd2(x, y), d) == 1:
                        seen[x * d + y] = 1
                    x = (x + b) % d
                    y = (y + c) % d
                out.append(_serialize(words, d))
        return out
    finally:
        free(seen); free(words)


def union_sweep(Py_ssize_t d, list gens):
    """Per vector: number of generator orbits containing it, and their union."""
    cdef Py_ssize_t norb = len(gens)
    cdef Py_ssize_t nw = _nwords(d)
    cdef unsigned long long *orbits = <unsigned long long *> calloc(
        norb * nw if norb else 1, sizeof(unsigned long long))
    cdef unsigned long long *acc = <unsigned long long *> malloc(
        nw * sizeof(unsigned long long))
    if orbits == NULL or acc == NULL:
        free(orbits); free(acc)
        raise MemoryError()
    cdef list counts = []
    cdef list masks = []
    cdef Py_ssize_t k, i, j, cnt
    cdef Py_ssize_t gb, gc
    try:
        for k in range(norb):
            gb, gc = gens[k]
            _fill_orbit(d, gb % d, gc % d, orbits + k * nw)
        for i in range(d * d):
            memset(acc, 0, nw * sizeof(unsigned long long))
            cnt = 0
            for k in range(norb):
                if _get_bit(orbits + k * nw, i):
                    cnt += 1
                    for j in range(nw):
                        acc[j] |= orbits[k * nw + j]
            counts.append(cnt)
            masks.append(_serialize(acc, d))
        return counts, masks
    finally:
        free(orbits); free(acc)


def span_mask(Py_ssize_t d, list gens, Py_ssize_t cap):
    """Additive closure of the given orbits, stopped early once it reaches cap."""
    cdef unsigned long long *words = <unsigned long long *> calloc(
        _nwords(d), sizeof(unsigned long long))
    cdef Py_ssize_t *mx = <Py_ssize_t *> malloc(d * d * sizeof(Py_ssize_t))
    cdef Py_ssize_t *my = <Py_ssize_t *> malloc(d * d * sizeof(Py_ssize_t))
    cdef Py_ssize_t *ox = <Py_ssize_t *> malloc(d * sizeof(Py_ssize_t))
    cdef Py_ssize_t *oy = <Py_ssize_t *> malloc(d * sizeof(Py_ssize_t))
    if words == NULL or mx == NULL or my == NULL or ox == NULL or oy == NULL:
        free(words); free(mx); free(my); free(ox); free(oy)
        raise MemoryError()
    cdef Py_ssize_t count = 1, snapshot, s, t, u, x, y, idx, norb
    cdef Py_ssize_t gb, gc
    cdef bint fresh
    mx[0] = 0
    my[0] = 0
    _set_bit(words, 0)
    try:
        for gb, gc in gens:
            if count >= cap:
                break
            gb = gb % d
            gc = gc % d
            norb = 0
            fresh = 0
            x = gb
            y = gc
            for u in range(1, d):
                ox[norb] = x
                oy[norb] = y
                norb += 1
                if not _get_bit(words, x * d + y):
                    fresh = 1
                x = (x + gb) % d
                y = (y + gc) % d
            if not fresh:
                continue
            snapshot = count
            for s in range(snapshot):
                if count >= cap:
                    break
                for t in range(norb):
                    x = (mx[s] + ox[t]) % d
                    y = (my[s] + oy[t]) % d
                    idx = x * d + y
                    if not _get_bit(words, idx):
                        _set_bit(words, idx)
                        mx[count] = x
                        my[count] = y
                        count += 1
        return _serialize(words, d)
    finally:
        free(words); free(mx); free(my); free(ox); free(oy)


def submodule_closed(Py_ssize_t d, bytes mask):
    """Whether the masked set is closed under addition (hence a submodule)."""
    cdef Py_ssize_t nb = _nbytes(d)
    if len(mask) != nb:
        raise ValueError(f"mask must have {nb} bytes, got {len(mask)}")
    cdef unsigned long long *words = <unsigned long long *> calloc(
        _nwords(d), sizeof(unsigned long long))
    cdef Py_ssize_t *xs = <Py_ssize_t *> malloc(d * d * sizeof(Py_ssize_t))
    cdef Py_ssize_t *ys = <Py_ssize_t *> malloc(d * d * sizeof(Py_ssize_t))
    if words == NULL or xs == NULL or ys == NULL:
        free(words); free(xs); free(ys)
        raise MemoryError()
    cdef const unsigned char *raw = mask
    cdef Py_ssize_t i, j, n = 0
    cdef bint ok = 1
    try:
        for i in range(nb):
            words[i >> 3] |= (<unsigned long long> raw[i]) << ((i & 7) << 3)
        for i in range(d * d):
            if _get_bit(words, i):
                xs[n] = i // d
                ys[n] = i % d
                n += 1
        for i in range(n):
            for j in range(n):
                if not _get_bit(words, ((xs[i] + xs[j]) % d) * d + (ys[i] + ys[j]) % d):
                    ok = 0
                    break
            if not ok:
                break
        return bool(ok)
    finally:
        free(words); free(xs); free(ys)
