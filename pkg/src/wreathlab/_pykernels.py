"""Pure-Python tableau kernels.

Elements are flat label vectors: every labeled vertex of the truncated tree,
level by level, lexicographic by path inside each level.  ``layout`` is the
tuple ``(orders, offsets)`` produced by :meth:`Signature.layout`.
"""

from collections import deque


class LimitExceeded(RuntimeError):
    """Closure grew past the caller's element budget."""


def vertex_images(layout, g):
    orders, offsets = layout
    m = len(orders)
    img = [0] * offsets[m]
    for lvl in range(m - 1):
        d = orders[lvl]
        e = orders[lvl + 1]
        base = offsets[lvl]
        nbase = offsets[lvl + 1]
        for p in range(base, nbase):
            q = img[p]
            shift = g[p]
            cp = nbase + (p - base) * d
            cq = nbase + (q - base) * d
            for c in range(d):
                img[cp + c] = cq + (c + shift) % d
    return img


def mul(layout, g, h):
    orders, offsets = layout
    img = vertex_images(layout, g)
    out = [0] * len(g)
    for lvl, d in enumerate(orders):
        for p in range(offsets[lvl], offsets[lvl + 1]):
            out[p] = (g[p] + h[img[p]]) % d
    return out


def inv(layout, g):
    orders, offsets = layout
    img = vertex_images(layout, g)
    out = [0] * len(g)
    for lvl, d in enumerate(orders):
        for p in range(offsets[lvl], offsets[lvl + 1]):
            out[img[p]] = (-g[p]) % d
    return out


def act(layout, g, digits):
    orders, offsets = layout
    out = []
    pos = 0  # index of the current vertex inside its level
    for lvl, d in enumerate(orders):
        x = (digits[lvl] + g[offsets[lvl] + pos]) % d
        out.append(x)
        pos = pos * d + digits[lvl]
    return out


def closure(layout, gens, limit):
    """Breadth-first closure of ``gens`` (byte-encoded) under right multiplication.

    For a finite group the monoid generated by a set equals the subgroup, so
    inverses are never needed.  Keys are ``bytes`` when every order fits in a
    byte, tuples otherwise.
    """
    pack = bytes if max(layout[0]) <= 256 else tuple
    ident = pack(layout[1][-1]) if pack is bytes else (0,) * layout[1][-1]
    seen = {ident}
    queue = deque([ident])
    gens = [list(x) for x in gens]
    while queue:
        cur = queue.popleft()
        for s in gens:
            nxt = pack(mul(layout, cur, s))
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > limit:
                    raise LimitExceeded(f"closure exceeded {limit} elements")
                queue.append(nxt)
    return seen
