# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled tableau kernels; same contract as ``_pykernels``."""

from collections import deque

from libc.stdlib cimport malloc, free

from wreathlab._pykernels import LimitExceeded


cdef struct Layout:
    int m
    int size
    int *orders
    int *offsets


cdef int _load(Layout *lay, object layout) except -1:
    orders, offsets = layout
    lay.m = len(orders)
    lay.size = offsets[lay.m]
    lay.orders = <int *> malloc(lay.m * sizeof(int))
    lay.offsets = <int *> malloc((lay.m + 1) * sizeof(int))
    if lay.orders == NULL or lay.offsets == NULL:
        raise MemoryError()
    cdef int i
    for i in range(lay.m):
        lay.orders[i] = orders[i]
    for i in range(lay.m + 1):
        lay.offsets[i] = offsets[i]
    return 0


cdef void _release(Layout *lay):
    free(lay.orders)
    free(lay.offsets)


cdef void _images(Layout *lay, const int *g, int *img) noexcept nogil:
    cdef int lvl, p, q, c, d, base, nbase, shift, cp, cq
    img[0] = 0
    for lvl in range(lay.m - 1):
        d = lay.orders[lvl]
        base = lay.offsets[lvl]
        nbase = lay.offsets[lvl + 1]
        for p in range(base, nbase):
            q = img[p]
            shift = g[p]
            cp = nbase + (p - base) * d
            cq = nbase + (q - base) * d
            for c in range(d):
                img[cp + c] = cq + (c + shift) % d


cdef void _mul(Layout *lay, const int *g, const int *h, int *img, int *out) noexcept nogil:
    cdef int lvl, p, d
    _images(lay, g, img)
    for lvl in range(lay.m):
        d = lay.orders[lvl]
        for p in range(lay.offsets[lvl], lay.offsets[lvl + 1]):
            out[p] = (g[p] + h[img[p]]) % d


cdef int *_ints(object seq, int n) except NULL:
    cdef int *buf = <int *> malloc(max(n, 1) * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    cdef int i
    for i in range(n):
        buf[i] = seq[i]
    return buf


def vertex_images(layout, g):
    cdef Layout lay
    _load(&lay, layout)
    cdef int *gb = _ints(g, lay.size)
    cdef int *img = <int *> malloc(max(lay.size, 1) * sizeof(int))
    try:
        _images(&lay, gb, img)
        return [img[i] for i in range(lay.size)]
    finally:
        free(gb)
        free(img)
        _release(&lay)


def mul(layout, g, h):
    cdef Layout lay
    _load(&lay, layout)
    cdef int *gb = _ints(g, lay.size)
    cdef int *hb = _ints(h, lay.size)
    cdef int *img = <int *> malloc(max(lay.size, 1) * sizeof(int))
    cdef int *out = <int *> malloc(max(lay.size, 1) * sizeof(int))
    try:
        _mul(&lay, gb, hb, img, out)
        return [out[i] for i in range(lay.size)]
    finally:
        free(gb)
        free(hb)
        free(img)
        free(out)
        _release(&lay)


def inv(layout, g):
    cdef Layout lay
    _load(&lay, layout)
    cdef int *gb = _ints(g, lay.size)
    cdef int *img = <int *> malloc(max(lay.size, 1) * sizeof(int))
    cdef int *out = <int *> malloc(max(lay.size, 1) * sizeof(int))
    cdef int lvl, p, d
    try:
        _images(&lay, gb, img)
        for lvl in range(lay.m):
            d = lay.orders[lvl]
            for p in range(lay.offsets[lvl], lay.offsets[lvl + 1]):
                out[img[p]] = (d - gb[p]) % d
        return [out[i] for i in range(lay.size)]
    finally:
        free(gb)
        free(img)
        free(out)
        _release(&lay)


def act(layout, g, digits):
    orders, offsets = layout
    out = []
    cdef long pos = 0
    cdef int lvl, d, x
    for lvl in range(len(orders)):
        d = orders[lvl]
        x = (digits[lvl] + g[offsets[lvl] + pos]) % d
        out.append(x)
        pos = pos * d + digits[lvl]
    return out


def closure(layout, gens, long limit):
    orders, offsets = layout
    if max(orders) > 256:
        from wreathlab import _pykernels
        return _pykernels.closure(layout, gens, limit)

    cdef Layout lay
    _load(&lay, layout)
    cdef int n = lay.size
    cdef int ngens = len(gens)
    cdef int *gbuf = <int *> malloc(max(ngens * n, 1) * sizeof(int))
    cdef int *cur = <int *> malloc(max(n, 1) * sizeof(int))
    cdef int *img = <int *> malloc(max(n, 1) * sizeof(int))
    cdef int *out = <int *> malloc(max(n, 1) * sizeof(int))
    cdef unsigned char *packed = <unsigned char *> malloc(max(n, 1))
    cdef int i, j
    cdef bytes key, nxt
    cdef const unsigned char *raw
    try:
        for j in range(ngens):
            for i in range(n):
                gbuf[j * n + i] = gens[j][i]
        ident = bytes(n)
        seen = {ident}
        queue = deque([ident])
        while queue:
            key = queue.popleft()
            raw = key
            for i in range(n):
                cur[i] = raw[i]
            for j in range(ngens):
                _mul(&lay, cur, gbuf + j * n, img, out)
                for i in range(n):
                    packed[i] = <unsigned char> out[i]
                nxt = packed[:n]
                if nxt not in seen:
                    seen.add(nxt)
                    if len(seen) > limit:
                        raise LimitExceeded(f"closure exceeded {limit} elements")
                    queue.append(nxt)
        return seen
    finally:
        free(gbuf)
        free(cur)
        free(img)
        free(out)
        free(packed)
        _release(&lay)
