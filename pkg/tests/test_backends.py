import random
import subprocess
import sys

import pytest

from wreathlab import _pykernels
from wreathlab.core import Signature, group_order
from wreathlab.generators import directed_generator, rooted_generator

kernels = pytest.importorskip("wreathlab._kernels")


def _rand(sig, rng):
    return [rng.randrange(d) for lvl, d in enumerate(sig.orders) for _ in range(sig.widths[lvl])]


@pytest.mark.parametrize("orders", [(2,), (2, 3), (3, 2, 4), (2, 3, 5), (300, 2)])
def test_kernels_agree(orders):
    sig = Signature(orders)
    rng = random.Random(5)
    for _ in range(300):
        g, h = _rand(sig, rng), _rand(sig, rng)
        assert list(kernels.mul(sig.layout, g, h)) == list(_pykernels.mul(sig.layout, g, h))
        assert list(kernels.inv(sig.layout, g)) == list(_pykernels.inv(sig.layout, g))
        w = [rng.randrange(d) for d in orders]
        assert list(kernels.act(sig.layout, g, w)) == list(_pykernels.act(sig.layout, g, w))


def test_closures_agree():
    sig = Signature((2, 3, 2))
    gens = [list(rooted_generator(sig).flat), list(directed_generator(sig).flat)]
    a = kernels.closure(sig.layout, gens, 10**6)
    b = _pykernels.closure(sig.layout, gens, 10**6)
    assert a == b and len(a) == group_order(sig)


def test_limit_in_both_kernels():
    sig = Signature((2, 3, 5))
    gens = [[1] + [0] * 38, [0, 1, 0, 0, 0, 0, 1] + [0] * 32]
    for k in (kernels, _pykernels):
        with pytest.raises(_pykernels.LimitExceeded):
            k.closure(sig.layout, gens, 100)


def test_pure_env_forces_python():
    code = "import wreathlab; print(wreathlab.BACKEND)"
    out = subprocess.run(
        [sys.executable, "-c", code], capture_output=True, text=True, env={"WREATHLAB_PURE": "1", "PATH": ""}
    )
    assert out.stdout.strip() == "python"
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, env={"PATH": ""})
    assert out.stdout.strip() == "cython"
