"""Iterated wreath products of finite cyclic groups as truncated-tree automorphisms.

An element of ``C_{i1} wr C_{i2} wr ... wr C_{im}`` (active group leftmost) is
stored as its Kaloujnine tableau: for each level ``l < m`` one cycle power in
``[0, i_{l+1})`` per vertex of that level, vertices ordered lexicographically by
their root-to-vertex path.

Products follow the wreath recursion ``g*h = (g_1 h_{g(1)}, ..., g_d h_{g(d)}) s_g s_h``,
which in leaf terms means ``g`` acts first::

    act(g * h, w) == act(h, act(g, w))
"""

from __future__ import annotations

import math
import os
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Hashable, Iterable, Sequence, TypeVar

from wreathlab._backend import LimitExceeded, kernels

__all__ = [
    "DEFAULT_LIMIT",
    "LimitExceeded",
    "Signature",
    "TreeElement",
    "identity",
    "mul",
    "inv",
    "power",
    "act_on_leaf",
    "element_order",
    "closure",
    "closure_size",
    "group_order",
    "all_elements",
    "all_leaves",
    "generic_closure",
    "section",
]


def default_limit() -> int:
    return int(os.environ.get("WREATHLAB_LIMIT", "1000000"))


DEFAULT_LIMIT = default_limit()


@dataclass(frozen=True)
class Signature:
    """Cyclic orders ``(i1, ..., im)``; ``i1`` is the order of the root group."""

    orders: tuple[int, ...]

    def __post_init__(self):
        orders = tuple(int(x) for x in self.orders)
        if not orders:
            raise ValueError("signature needs at least one level")
        if any(x < 1 for x in orders):
            raise ValueError(f"cyclic orders must be >= 1, got {orders}")
        object.__setattr__(self, "orders", orders)

    @classmethod
    def of(cls, *orders: int) -> "Signature":
        return cls(tuple(orders))

    @property
    def depth(self) -> int:
        return len(self.orders)

    @cached_property
    def widths(self) -> tuple[int, ...]:
        """Vertex counts of levels ``0..m`` (level ``l`` has ``i1*...*il`` vertices)."""
        out = [1]
        for d in self.orders:
            out.append(out[-1] * d)
        return tuple(out)

    @cached_property
    def offsets(self) -> tuple[int, ...]:
        out = [0]
        for w in self.widths[:-1]:
            out.append(out[-1] + w)
        return tuple(out)

    @property
    def size(self) -> int:
        """Number of labeled vertices (levels ``0..m-1``)."""
        return self.offsets[-1]

    @cached_property
    def layout(self):
        return (self.orders, self.offsets)

    def vertex_index(self, path: Sequence[int]) -> int:
        """Position of the vertex ``path`` inside its level."""
        idx = 0
        for lvl, x in enumerate(path):
            if not 0 <= x < self.orders[lvl]:
                raise ValueError(f"digit {x} out of range at level {lvl + 1}")
            idx = idx * self.orders[lvl] + x
        return idx

    def vertex_path(self, level: int, index: int) -> tuple[int, ...]:
        if not 0 <= index < self.widths[level]:
            raise ValueError(f"vertex {index} does not exist at level {level}")
        digits = []
        for lvl in reversed(range(level)):
            index, x = divmod(index, self.orders[lvl])
            digits.append(x)
        return tuple(reversed(digits))

    def __str__(self) -> str:
        return "x".join(map(str, self.orders))


class TreeElement:
    """A tableau; immutable and hashable."""

    __slots__ = ("signature", "flat", "_hash")

    def __init__(self, signature: Signature, flat: Sequence[int]):
        flat = tuple(int(x) for x in flat)
        if len(flat) != signature.size:
            raise ValueError(
                f"expected {signature.size} labels for signature {signature}, got {len(flat)}"
            )
        for lvl, d in enumerate(signature.orders):
            for p in range(signature.offsets[lvl], signature.offsets[lvl + 1]):
                if not 0 <= flat[p] < d:
                    raise ValueError(f"label {flat[p]} at level {lvl} not in [0, {d})")
        self.signature = signature
        self.flat = flat
        self._hash = hash((signature.orders, flat))

    @classmethod
    def _trusted(cls, signature: Signature, flat) -> "TreeElement":
        obj = cls.__new__(cls)
        obj.signature = signature
        obj.flat = tuple(flat)
        obj._hash = hash((signature.orders, obj.flat))
        return obj

    @classmethod
    def from_levels(cls, signature: Signature, levels: Sequence[Sequence[int]]) -> "TreeElement":
        if len(levels) != signature.depth:
            raise ValueError(f"expected {signature.depth} levels, got {len(levels)}")
        for lvl, vec in enumerate(levels):
            if len(vec) != signature.widths[lvl]:
                raise ValueError(
                    f"level {lvl} needs {signature.widths[lvl]} labels, got {len(vec)}"
                )
        return cls(signature, [x for vec in levels for x in vec])

    @property
    def levels(self) -> tuple[tuple[int, ...], ...]:
        sig = self.signature
        return tuple(
            self.flat[sig.offsets[l] : sig.offsets[l + 1]] for l in range(sig.depth)
        )

    def label(self, level: int, index: int) -> int:
        return self.flat[self.signature.offsets[level] + index]

    def encode(self) -> bytes | tuple[int, ...]:
        """Canonical key; bytes whenever every order fits in a byte."""
        if max(self.signature.orders) <= 256:
            return bytes(self.flat)
        return self.flat

    def is_identity(self) -> bool:
        return not any(self.flat)

    def __eq__(self, other):
        if not isinstance(other, TreeElement):
            return NotImplemented
        return self.signature == other.signature and self.flat == other.flat

    def __hash__(self):
        return self._hash

    def __lt__(self, other: "TreeElement") -> bool:
        return self.flat < other.flat

    def __mul__(self, other: "TreeElement") -> "TreeElement":
        return mul(self, other)

    def __pow__(self, k: int) -> "TreeElement":
        return power(self, k)

    def __invert__(self) -> "TreeElement":
        return inv(self)

    def __str__(self) -> str:
        return "[" + "; ".join(",".join(map(str, vec)) for vec in self.levels) + "]"

    def __repr__(self) -> str:
        return f"TreeElement({self.signature}, {self})"

    def to_json(self) -> list[list[int]]:
        return [list(vec) for vec in self.levels]


def _check_same(g: TreeElement, h: TreeElement) -> None:
    if g.signature != h.signature:
        raise ValueError(f"signature mismatch: {g.signature} vs {h.signature}")


def identity(sig: Signature) -> TreeElement:
    return TreeElement._trusted(sig, (0,) * sig.size)


def mul(g: TreeElement, h: TreeElement) -> TreeElement:
    _check_same(g, h)
    return TreeElement._trusted(g.signature, kernels.mul(g.signature.layout, g.flat, h.flat))


def inv(g: TreeElement) -> TreeElement:
    return TreeElement._trusted(g.signature, kernels.inv(g.signature.layout, g.flat))


def power(g: TreeElement, k: int) -> TreeElement:
    """``g**k`` by binary exponentiation; negative ``k`` goes through :func:`inv`."""
    if k < 0:
        g, k = inv(g), -k
    result = identity(g.signature)
    while k:
        if k & 1:
            result = mul(result, g)
        g = mul(g, g)
        k >>= 1
    return result


def act_on_leaf(g: TreeElement, leaf: Sequence[int]) -> tuple[int, ...]:
    sig = g.signature
    if len(leaf) != sig.depth:
        raise ValueError(f"leaf word must have {sig.depth} digits, got {len(leaf)}")
    for lvl, x in enumerate(leaf):
        if not 0 <= x < sig.orders[lvl]:
            raise ValueError(f"digit {x} out of range [0, {sig.orders[lvl]}) at position {lvl}")
    return tuple(kernels.act(sig.layout, g.flat, leaf))


def group_order(sig: Signature) -> int:
    """``prod_k i_k ** (i_1 ... i_{k-1})``."""
    return math.prod(d**w for d, w in zip(sig.orders, sig.widths))


def element_order(g: TreeElement) -> int:
    k = 1
    cur = g
    while not cur.is_identity():
        cur = mul(cur, g)
        k += 1
    return k


def closure(gens: Iterable[TreeElement], limit: int | None = None) -> set[TreeElement]:
    """Subgroup generated by ``gens``.

    Raises :class:`LimitExceeded` once more than ``limit`` elements are found;
    that means the instance is too large, not that generation failed.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("closure needs at least one generator to fix the signature")
    sig = gens[0].signature
    keys = _closure_keys(sig, gens, limit)
    return {TreeElement._trusted(sig, k) for k in keys}


def closure_size(gens: Iterable[TreeElement], limit: int | None = None) -> int:
    gens = list(gens)
    if not gens:
        raise ValueError("closure needs at least one generator")
    return len(_closure_keys(gens[0].signature, gens, limit))


def _closure_keys(sig: Signature, gens: list[TreeElement], limit: int | None):
    for g in gens:
        if g.signature != sig:
            raise ValueError(f"signature mismatch: {g.signature} vs {sig}")
    if limit is None:
        limit = default_limit()
    if limit < 1:
        raise ValueError("limit must be >= 1")
    return kernels.closure(sig.layout, [g.flat for g in gens], limit)


def all_leaves(sig: Signature):
    """Every leaf word of the truncated tree, lexicographically."""
    from itertools import product

    return product(*(range(d) for d in sig.orders))


def all_elements(sig: Signature):
    """Every tableau of ``sig`` (only sensible for tiny signatures)."""
    from itertools import product

    ranges = [range(d) for lvl, d in enumerate(sig.orders) for _ in range(sig.widths[lvl])]
    for flat in product(*ranges):
        yield TreeElement._trusted(sig, flat)


T = TypeVar("T")


def generic_closure(
    gens: Iterable[T],
    op: Callable[[T, T], T],
    identity_elem: T,
    limit: int | None = None,
    key: Callable[[T], Hashable] = lambda x: x,
) -> list[T]:
    """BFS closure for any finite group given by its multiplication."""
    if limit is None:
        limit = default_limit()
    gens = list(gens)
    seen = {key(identity_elem): identity_elem}
    queue = deque([identity_elem])
    while queue:
        cur = queue.popleft()
        for s in gens:
            nxt = op(cur, s)
            k = key(nxt)
            if k not in seen:
                seen[k] = nxt
                if len(seen) > limit:
                    raise LimitExceeded(f"closure exceeded {limit} elements")
                queue.append(nxt)
    return list(seen.values())


def section(g: TreeElement, path: Sequence[int]) -> TreeElement:
    """State of ``g`` at the vertex ``path``, as an element of the subtree's group."""
    sig = g.signature
    lvl = len(path)
    if lvl >= sig.depth:
        raise ValueError("sections exist only at vertices above the leaf level")
    start = sig.vertex_index(path)
    sub = Signature(sig.orders[lvl:])
    flat = []
    for k in range(lvl, sig.depth):
        span = sig.widths[k] // sig.widths[lvl]
        base = sig.offsets[k] + start * span
        flat.extend(g.flat[base : base + span])
    return TreeElement._trusted(sub, flat)
