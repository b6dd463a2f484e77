"""Two-level wreath products ``(A, X) wr B`` with a possibly non-faithful active group.

``A = Z_r`` acts on ``X = {0, ..., n-1}`` by ``a: x -> x + a*step (mod n)``; the
passive group ``B`` is either cyclic (``Z_m``) or a small iterated wreath
product.  Elements are pairs ``(a; f)`` with product

    (a1; f1)(a2; f2) = (a1 + a2; i -> f1(i) * f2(a1(i)))

which, for ``r == n`` and ``step == 1``, is the two-level tableau product of
:mod:`wreathlab.core`.

Closed-form answers (commutator membership, generators of the commutator
subgroup, abelianization, center) sit next to brute-force oracles that
enumerate the whole group.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Any, Iterable, NamedTuple, Sequence

from wreathlab import core
from wreathlab.core import LimitExceeded, Signature, generic_closure


class NonTransitiveError(ValueError):
    """The active group has more than one orbit on ``X``."""


class CyclicGroup:
    """``Z_m`` written additively."""

    abelian = True

    def __init__(self, order: int):
        if order < 1:
            raise ValueError("cyclic order must be >= 1")
        self.order = order
        self.identity = 0

    def mul(self, a, b):
        return (a + b) % self.order

    def inv(self, a):
        return (-a) % self.order

    def elements(self):
        return range(self.order)

    def contains(self, a) -> bool:
        return isinstance(a, int) and 0 <= a < self.order

    def center(self):
        return list(range(self.order))

    def derived(self) -> frozenset:
        return frozenset({0})

    def __len__(self):
        return self.order

    def __repr__(self):
        return f"Z{self.order}"


class TreeGroup:
    """An iterated cyclic wreath product used as a passive group (enumerated)."""

    abelian = False

    def __init__(self, sig: Signature):
        self.sig = sig
        self.identity = core.identity(sig)
        self._elements = None
        self._center = None
        self._derived = None

    def mul(self, a, b):
        return core.mul(a, b)

    def inv(self, a):
        return core.inv(a)

    def elements(self):
        if self._elements is None:
            self._elements = list(core.all_elements(self.sig))
        return self._elements

    def contains(self, a) -> bool:
        return isinstance(a, core.TreeElement) and a.signature == self.sig

    def center(self):
        if self._center is None:
            els = self.elements()
            self._center = [x for x in els if all(core.mul(x, y) == core.mul(y, x) for y in els)]
        return self._center

    def derived(self) -> frozenset:
        if self._derived is None:
            els = self.elements()
            comms = {core.mul(core.mul(x, y), core.mul(core.inv(x), core.inv(y))) for x in els for y in els}
            self._derived = frozenset(generic_closure(comms, core.mul, self.identity))
        return self._derived

    def __len__(self):
        return core.group_order(self.sig)

    def __repr__(self):
        return f"W({self.sig})"


class WreathPair(NamedTuple):
    top: int
    base: tuple

    def __str__(self) -> str:
        return f"({self.top}; {','.join(map(str, self.base))})"


@dataclass(frozen=True)
class TwoLevelWreath:
    active_order: int
    set_size: int
    passive: Any = 2
    step: int = 1
    group_b: Any = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        r, n = self.active_order, self.set_size
        if r < 1 or n < 1:
            raise ValueError("active order and set size must be >= 1")
        if isinstance(self.passive, Signature):
            b = TreeGroup(self.passive)
        elif isinstance(self.passive, int):
            b = CyclicGroup(self.passive)
        else:
            raise TypeError("passive must be a cyclic order or a Signature")
        object.__setattr__(self, "group_b", b)
        # x -> x + a*step must define a homomorphism Z_r -> Sym(X)
        for a in range(r):
            for c in range(r):
                for x in range(n):
                    if self.point((a + c) % r, x) != self.point(c, self.point(a, x)):
                        raise ValueError(
                            f"shift by a*{self.step} mod {n} is not an action of Z_{r}"
                        )

    @classmethod
    def standard(cls, n: int, m: int) -> "TwoLevelWreath":
        """``Z_n wr Z_m`` with its regular active action."""
        return cls(n, n, m)

    def point(self, a: int, x: int) -> int:
        return (x + a * self.step) % self.set_size

    def orbits(self) -> list[list[int]]:
        seen, out = set(), []
        for x in range(self.set_size):
            if x in seen:
                continue
            orb = sorted({self.point(a, x) for a in range(self.active_order)})
            seen.update(orb)
            out.append(orb)
        return out

    def is_transitive(self) -> bool:
        return len(self.orbits()) == 1

    def order(self) -> int:
        return self.active_order * len(self.group_b) ** self.set_size

    def identity(self) -> WreathPair:
        return WreathPair(0, (self.group_b.identity,) * self.set_size)

    def elements(self):
        for top in range(self.active_order):
            for base in itertools.product(self.group_b.elements(), repeat=self.set_size):
                yield WreathPair(top, base)

    def check(self, x: WreathPair) -> WreathPair:
        if not 0 <= x.top < self.active_order:
            raise ValueError(f"top {x.top} not in Z_{self.active_order}")
        if len(x.base) != self.set_size:
            raise ValueError(f"base needs {self.set_size} coordinates, got {len(x.base)}")
        if not all(self.group_b.contains(b) for b in x.base):
            raise ValueError(f"base coordinates must lie in {self.group_b!r}")
        return x

    def __str__(self) -> str:
        extra = "" if self.step == 1 else f", step {self.step}"
        return f"(Z{self.active_order}, X{self.set_size}{extra}) wr {self.group_b!r}"


def pair_mul(x: WreathPair, y: WreathPair, W: TwoLevelWreath) -> WreathPair:
    if len(x.base) != W.set_size or len(y.base) != W.set_size:
        raise ValueError("pair shape does not match the wreath product")
    B = W.group_b
    base = tuple(B.mul(x.base[i], y.base[W.point(x.top, i)]) for i in range(W.set_size))
    return WreathPair((x.top + y.top) % W.active_order, base)


def pair_inv(x: WreathPair, W: TwoLevelWreath) -> WreathPair:
    B = W.group_b
    base = [None] * W.set_size
    for i in range(W.set_size):
        base[W.point(x.top, i)] = B.inv(x.base[i])
    return WreathPair((-x.top) % W.active_order, tuple(base))


def commutator(x: WreathPair, y: WreathPair, W: TwoLevelWreath) -> WreathPair:
    """``[x, y] = x y x^-1 y^-1``."""
    return pair_mul(pair_mul(x, y, W), pair_mul(pair_inv(x, W), pair_inv(y, W), W), W)


def is_in_commutator(x: WreathPair, W: TwoLevelWreath) -> bool:
    """Membership in ``W'`` for a transitive action.

    The top must lie in ``A' = 1`` and the product of the base coordinates in
    ``B'``; for a cyclic passive group that is ``top == 0`` and
    ``sum(base) == 0 (mod m)``.  The product order is irrelevant because
    ``B/B'`` is abelian.
    """
    W.check(x)
    if not W.is_transitive():
        raise NonTransitiveError(f"{W} has {len(W.orbits())} orbits; only transitive actions are supported")
    if x.top != 0:
        return False
    B = W.group_b
    prod = B.identity
    for b in x.base:
        prod = B.mul(prod, b)
    return prod in B.derived()


def commutator_generators(n: int, m: int) -> list[WreathPair]:
    """``h_i = (0; e_i + (m-1) e_n)`` for ``i < n``, generating ``(Z_n wr Z_m)'``."""
    if n < 2 or m < 1:
        raise ValueError("need n >= 2 and m >= 1")
    gens = []
    for i in range(n - 1):
        base = [0] * n
        base[i] = 1 % m
        base[n - 1] = (m - 1) % m
        gens.append(WreathPair(0, tuple(base)))
    return gens


def _enumerate(W: TwoLevelWreath, limit: int | None) -> list[WreathPair]:
    if limit is None:
        limit = core.default_limit()
    if W.order() > limit:
        raise LimitExceeded(f"|W| = {W.order()} exceeds limit {limit}")
    return list(W.elements())


def subgroup_closure(gens: Iterable[WreathPair], W: TwoLevelWreath, limit: int | None = None) -> set[WreathPair]:
    return set(generic_closure(gens, lambda a, b: pair_mul(a, b, W), W.identity(), limit))


def commutator_subgroup_oracle(W: TwoLevelWreath, limit: int | None = None) -> set[WreathPair]:
    """``W'`` by brute force: close the set of all commutators ``[x, y]``."""
    els = _enumerate(W, limit)
    comms = {commutator(x, y, W) for x in els for y in els}
    return subgroup_closure(comms, W, limit)


def minimal_generating_set(elements: Sequence, op, identity, max_size: int = 4):
    """Smallest subset of ``elements`` generating all of them, by exhaustive search.

    Returns ``None`` if nothing of size ``<= max_size`` works.
    """
    target = set(elements)
    if target == {identity}:
        return []
    candidates = [e for e in elements if e != identity]
    for k in range(1, max_size + 1):
        for combo in itertools.combinations(candidates, k):
            if len(generic_closure(combo, op, identity, limit=len(target))) == len(target):
                return list(combo)
    return None


def dprime_upper_bound(n: int, d_b: int, d_bprime: int, d_aprime: int) -> int:
    """Upper bound ``(n-1) d(B) + d(B') + d(A')`` on the generator count of ``W'``.

    The bound follows the theorem statement; its proof text counts without the
    ``d(A')`` term.
    """
    if min(n, d_b, d_bprime, d_aprime) < 0:
        raise ValueError("inputs must be nonnegative")
    return (n - 1) * d_b + d_bprime + d_aprime


def _prime_powers(q: int) -> dict[int, int]:
    out = {}
    p = 2
    while p * p <= q:
        while q % p == 0:
            out[p] = out.get(p, 0) + 1
            q //= p
        p += 1
    if q > 1:
        out[q] = out.get(q, 0) + 1
    return out


def invariant_factors(orders: Iterable[int]) -> tuple[int, ...]:
    """Invariant factors ``d1 | d2 | ...`` of a product of cyclic groups; trivial factors dropped."""
    by_prime: dict[int, list[int]] = {}
    for q in orders:
        for p, e in _prime_powers(q).items():
            by_prime.setdefault(p, []).append(e)
    length = max((len(v) for v in by_prime.values()), default=0)
    factors = [1] * length
    for p, exps in by_prime.items():
        exps.sort(reverse=True)
        for i, e in enumerate(exps):
            factors[length - 1 - i] *= p**e
    return tuple(factors)


class Abelianization(NamedTuple):
    factors: tuple[int, ...]
    order: int


def abelianization(W: TwoLevelWreath) -> Abelianization:
    """``W / W' = Z_r x (Z_m)^k`` with ``k`` the number of orbits of ``A`` on ``X``."""
    if not isinstance(W.group_b, CyclicGroup):
        raise ValueError("abelianization is implemented for a cyclic passive group only")
    m = W.group_b.order
    orders = [W.active_order] + [m] * len(W.orbits())
    return Abelianization(invariant_factors(orders), math.prod(orders))


def action_kernel(W: TwoLevelWreath) -> list[int]:
    return [a for a in range(W.active_order) if all(W.point(a, x) == x for x in range(W.set_size))]


def center(W: TwoLevelWreath) -> set[WreathPair]:
    """``(Z(A) & K) x`` (orbit-constant maps into ``Z(B)``).

    ``K`` is the kernel of the action; when ``B`` is trivial every ``a`` in ``Z(A)``
    qualifies.
    """
    tops = action_kernel(W) if len(W.group_b) > 1 else list(range(W.active_order))
    orbits = W.orbits()
    zb = W.group_b.center()
    out = set()
    for values in itertools.product(zb, repeat=len(orbits)):
        base = [None] * W.set_size
        for orb, c in zip(orbits, values):
            for x in orb:
                base[x] = c
        for a in tops:
            out.add(WreathPair(a, tuple(base)))
    return out


def center_oracle(W: TwoLevelWreath, limit: int | None = None) -> set[WreathPair]:
    els = _enumerate(W, limit)
    return {x for x in els if all(pair_mul(x, y, W) == pair_mul(y, x, W) for y in els)}


def sort_pairs(pairs: Iterable[WreathPair]) -> list[WreathPair]:
    """Deterministic order: top, then base coordinates."""
    return sorted(pairs, key=lambda p: (p.top, tuple(getattr(b, "flat", b) for b in p.base)))
