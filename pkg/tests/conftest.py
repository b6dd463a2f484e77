import random

import pytest

from wreathlab.core import Signature, TreeElement


def leaf_action(sig, flat, leaf):
    """Leaf action straight from the tableau definition, independent of the kernels."""
    out = []
    prefix = ()
    for lvl, x in enumerate(leaf):
        # label of the vertex reached by the *original* prefix
        idx = 0
        for j, d in enumerate(prefix):
            idx = idx * sig.orders[j] + d
        out.append((x + flat[sig.offsets[lvl] + idx]) % sig.orders[lvl])
        prefix = prefix + (x,)
    return tuple(out)


def leaf_permutation(g):
    from itertools import product

    sig = g.signature
    return {w: leaf_action(sig, g.flat, w) for w in product(*(range(d) for d in sig.orders))}


def random_element(sig, rng):
    flat = [rng.randrange(d) for lvl, d in enumerate(sig.orders) for _ in range(sig.widths[lvl])]
    return TreeElement(sig, flat)


@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture
def sig23():
    return Signature((2, 3))
