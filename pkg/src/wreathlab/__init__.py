"""Wreath products of cyclic groups and the Morse-orbit group ``Z x|_phi Z^n``."""

from wreathlab._backend import BACKEND
from wreathlab.core import (
    LimitExceeded,
    Signature,
    TreeElement,
    act_on_leaf,
    closure,
    closure_size,
    element_order,
    group_order,
    identity,
    inv,
    mul,
    power,
)

__version__ = "0.1.0"
