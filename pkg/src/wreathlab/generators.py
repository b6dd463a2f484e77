"""Small generating sets for iterated wreath products of cyclic groups.

``rooted_generator`` and ``directed_generator`` give the two-element set; for
pairwise coprime orders the full canonical set (one cycle per level, each on a
single vertex) is recovered from them by lcm-powers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from wreathlab.core import (
    Signature,
    TreeElement,
    closure_size,
    element_order,
    generic_closure,
    group_order,
    identity,
    inv,
    mul,
    power,
    section,
)


class CoprimalityError(ValueError):
    """The orders involved are not coprime, so the construction does not apply."""


@dataclass(frozen=True)
class SpinePath:
    """Ray ``x1 x2 ...`` along which the directed generator lives.

    ``digits[l-1]`` is the child taken at depth ``l - 1``.  The level-``l``
    label of the directed generator sits on the sibling of the spine vertex
    at level ``l``: child 0, or child 1 when the spine itself turns to 0.
    """

    digits: tuple[int, ...]

    @classmethod
    def default(cls, sig: Signature) -> "SpinePath":
        # ray 1,1,1,...: puts pi_{l+1} after i_2*...*i_l + ... + i_l trivial coordinates
        return cls((1,) * (sig.depth - 1))

    @classmethod
    def from_vertices(cls, sig: Signature, vertices: Sequence[int]) -> "SpinePath":
        digits = []
        for lvl, v in enumerate(vertices, start=1):
            path = sig.vertex_path(lvl, v)
            if tuple(digits) != path[:-1]:
                raise ValueError(f"spine vertex {v} at level {lvl} is not a child of the previous one")
            digits.append(path[-1])
        return cls(tuple(digits))

    def vertices(self, sig: Signature) -> tuple[int, ...]:
        return tuple(sig.vertex_index(self.digits[:l]) for l in range(1, len(self.digits) + 1))

    def validate(self, sig: Signature) -> None:
        if len(self.digits) != sig.depth - 1:
            raise ValueError(f"spine needs {sig.depth - 1} digits for signature {sig}")
        for lvl, x in enumerate(self.digits, start=1):
            d = sig.orders[lvl - 1]
            if d < 2:
                raise ValueError(f"level {lvl} has a single child; no off-spine vertex exists")
            if not 0 <= x < d:
                raise ValueError(f"spine digit {x} out of range at level {lvl}")

    def off_spine(self, level: int) -> tuple[int, ...]:
        """Path of the labeled sibling at ``level`` (1-based)."""
        x = self.digits[level - 1]
        return self.digits[: level - 1] + (1 if x == 0 else 0,)


def rooted_generator(sig: Signature) -> TreeElement:
    flat = [0] * sig.size
    flat[0] = 1 % sig.orders[0]
    return TreeElement(sig, flat)


def directed_generator(sig: Signature, spine: SpinePath | None = None) -> TreeElement:
    if sig.depth < 2:
        raise ValueError("a directed generator needs at least two levels")
    spine = spine or SpinePath.default(sig)
    spine.validate(sig)
    flat = [0] * sig.size
    for lvl in range(1, sig.depth):
        idx = sig.vertex_index(spine.off_spine(lvl))
        flat[sig.offsets[lvl] + idx] = 1 % sig.orders[lvl]
    return TreeElement(sig, flat)


def lcm_except(sig: Signature, k: int) -> int:
    """lcm of every order but ``i_k`` (``k`` is 1-based)."""
    if not 1 <= k <= sig.depth:
        raise ValueError(f"k must lie in [1, {sig.depth}]")
    rest = sig.orders[: k - 1] + sig.orders[k:]
    return math.lcm(*rest) if rest else 1


def _extract(sig: Signature, beta: TreeElement, k: int) -> TreeElement:
    L = lcm_except(sig, k)
    d = sig.orders[k - 1]
    try:
        e = pow(L, -1, d)
    except ValueError:
        raise CoprimalityError(
            f"lcm of the other orders ({L}) is not invertible mod i_{k} = {d}"
        ) from None
    return power(power(beta, L), e)


def canonical_generators(sig: Signature, spine: SpinePath | None = None) -> list[TreeElement]:
    """``[sigma_1, ..., sigma_m]`` pulled out of the rooted/directed pair.

    ``sigma_k = (beta_{k-1} ** lcm_k) ** (lcm_k^-1 mod i_k)`` and the next state is
    ``beta_k = sigma_k^-1 * beta_{k-1}``.  Raises :class:`CoprimalityError` when the
    orders are not pairwise coprime.
    """
    return _canonical_walk(sig, spine)[0]


def spine_states(sig: Signature, spine: SpinePath | None = None) -> list[TreeElement]:
    """States ``beta_1, ..., beta_{m-1}`` read off at their spine vertices."""
    spine = spine or SpinePath.default(sig)
    remainders = _canonical_walk(sig, spine)[1]
    return [section(r, spine.digits[: k]) for k, r in enumerate(remainders)]


def _canonical_walk(sig: Signature, spine: SpinePath | None):
    sigmas = [rooted_generator(sig)]
    remainders = []
    if sig.depth == 1:
        return sigmas, remainders
    beta = directed_generator(sig, spine)
    for k in range(2, sig.depth + 1):
        remainders.append(beta)
        s = _extract(sig, beta, k)
        sigmas.append(s)
        beta = mul(inv(s), beta)
    return sigmas, remainders


def recursive_generators(
    sig: Signature, variant: str = "quotient", spine: SpinePath | None = None
) -> list[TreeElement]:
    """``[beta_0, beta_1, ..., beta_{m-1}]`` as full-tree elements.

    ``quotient`` takes ``beta_k = sigma_k^-1 beta_{k-1}``; ``power`` takes
    ``beta'_k = beta'_{k-1} ** i_k``.  Both span the same cyclic subgroups when
    the orders are pairwise coprime.
    """
    if variant == "quotient":
        return [rooted_generator(sig)] + _canonical_walk(sig, spine)[1]
    if variant != "power":
        raise ValueError(f"unknown variant {variant!r}")
    out = [rooted_generator(sig)]
    if sig.depth == 1:
        return out
    beta = directed_generator(sig, spine)
    for k in range(2, sig.depth + 1):
        out.append(beta)
        beta = power(beta, sig.orders[k - 1])
    return out


def verify_generation(gens: Sequence[TreeElement], sig: Signature, limit: int | None = None) -> bool:
    for g in gens:
        if g.signature != sig:
            raise ValueError(f"generator {g} does not belong to {sig}")
    if not gens:
        return group_order(sig) == 1
    return closure_size(gens, limit) == group_order(sig)


class ProductElement(NamedTuple):
    """Element of ``W(sigA) x W(sigB)``; multiplication is componentwise."""

    left: TreeElement
    right: TreeElement

    def __mul__(self, other):
        return ProductElement(mul(self.left, other.left), mul(self.right, other.right))

    def __str__(self) -> str:
        return f"({self.left}, {self.right})"


def _second(sig: Signature) -> TreeElement:
    # a depth-one factor has no directed generator
    return directed_generator(sig) if sig.depth >= 2 else identity(sig)


def two_generator_direct_product(
    sigA: Signature, sigB: Signature
) -> tuple[ProductElement, ProductElement]:
    """Two generators of ``W(sigA) x W(sigB)``.

    With ``beta_0, beta_1`` the rooted/directed pair of ``sigA`` and
    ``alpha_0, alpha_1`` that of ``sigB``, returns ``(beta_0, alpha_0), (beta_1, alpha_1)``
    when ``(|alpha_0|, |beta_0|) = (|alpha_1|, |beta_1|) = 1``, otherwise the crossed
    pair ``(beta_0, alpha_1), (beta_1, alpha_0)`` under the crossed hypothesis.
    """
    b0, b1 = rooted_generator(sigA), _second(sigA)
    a0, a1 = rooted_generator(sigB), _second(sigB)
    ob0, ob1, oa0, oa1 = map(element_order, (b0, b1, a0, a1))
    if math.gcd(oa0, ob0) == 1 and math.gcd(oa1, ob1) == 1:
        return ProductElement(b0, a0), ProductElement(b1, a1)
    crossed_defined = sigA.depth >= 2 and sigB.depth >= 2
    if crossed_defined and math.gcd(oa0, ob1) == 1 and math.gcd(oa1, ob0) == 1:
        return ProductElement(b0, a1), ProductElement(b1, a0)
    raise CoprimalityError(
        f"orders |a0|={oa0}, |a1|={oa1}, |b0|={ob0}, |b1|={ob1} satisfy neither coprimality pattern"
    )


def product_closure_size(gens: Sequence[ProductElement], limit: int | None = None) -> int:
    sigA, sigB = gens[0].left.signature, gens[0].right.signature
    one = ProductElement(identity(sigA), identity(sigB))
    return len(
        generic_closure(gens, ProductElement.__mul__, one, limit, key=lambda p: (p.left.flat, p.right.flat))
    )
