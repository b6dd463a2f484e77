import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import leaf_action, leaf_permutation, random_element
from wreathlab.core import (
    LimitExceeded,
    Signature,
    TreeElement,
    act_on_leaf,
    all_elements,
    all_leaves,
    closure,
    closure_size,
    element_order,
    group_order,
    identity,
    inv,
    mul,
    power,
    section,
)
from wreathlab.generators import canonical_generators, directed_generator, rooted_generator
from wreathlab.literals import parse_element


def el(text, orders):
    return parse_element(text, Signature(orders))


def test_signature_widths_and_validation():
    sig = Signature((2, 3, 5))
    assert sig.widths == (1, 2, 6, 30)
    assert sig.size == 9
    with pytest.raises(ValueError):
        Signature(())
    with pytest.raises(ValueError):
        Signature((2, 0))


def test_identity_labels():
    assert identity(Signature((2, 3))).levels == ((0,), (0, 0))
    assert identity(Signature((2,))).levels == ((0,),)


def test_identity_fixes_leaves_and_is_neutral(rng):
    sig = Signature((2, 3, 2))
    e = identity(sig)
    for w in all_leaves(sig):
        assert act_on_leaf(e, w) == w
    for _ in range(50):
        g = random_element(sig, rng)
        assert mul(e, g) == g == mul(g, e)


def test_mul_cyclic_order_two():
    assert mul(el("[1]", (2,)), el("[1]", (2,))) == el("[0]", (2,))


def test_mul_matches_leaf_composition_example():
    g = el("[1; 0,0]", (2, 2))
    h = el("[0; 1,0]", (2, 2))
    gh = mul(g, h)
    pg, ph = leaf_permutation(g), leaf_permutation(h)
    assert leaf_permutation(gh) == {w: ph[pg[w]] for w in pg}
    assert gh == el("[1; 0,1]", (2, 2))


@pytest.mark.parametrize("orders", [(2, 3, 2), (3, 2), (2, 2, 2)])
def test_mul_is_leaf_composition(orders, rng):
    sig = Signature(orders)
    for _ in range(200):
        g, h = random_element(sig, rng), random_element(sig, rng)
        pg, ph = leaf_permutation(g), leaf_permutation(h)
        assert leaf_permutation(mul(g, h)) == {w: ph[pg[w]] for w in pg}


@pytest.mark.parametrize("orders", [(2, 3, 2), (2, 3, 5)])
def test_group_axioms(orders, rng):
    sig = Signature(orders)
    e = identity(sig)
    for _ in range(1000):
        a, b, c = (random_element(sig, rng) for _ in range(3))
        assert mul(mul(a, b), c) == mul(a, mul(b, c))
        assert mul(a, inv(a)) == e == mul(inv(a), a)
        assert inv(mul(a, b)) == mul(inv(b), inv(a))


def test_inv_examples():
    assert inv(identity(Signature((2, 3)))) == identity(Signature((2, 3)))
    assert inv(el("[1]", (3,))) == el("[2]", (3,))


def test_pow_examples(sig23, rng):
    b1 = TreeElement.from_levels(sig23, [[0], [1, 0]])
    assert power(b1, 3).levels[1] == (0, 0)
    g = random_element(sig23, rng)
    assert power(g, 1) == g
    assert power(g, 0) == identity(sig23)
    assert power(g, element_order(g)) == identity(sig23)
    assert power(g, -2) == inv(mul(g, g))
    naive = identity(sig23)
    for k in range(1, 12):
        naive = mul(naive, g)
        assert power(g, k) == naive


def test_act_examples():
    g = el("[1; 0,0]", (2, 2))
    assert act_on_leaf(g, (0, 1)) == (1, 1)
    with pytest.raises(ValueError):
        act_on_leaf(g, (0, 2))
    with pytest.raises(ValueError):
        act_on_leaf(g, (0,))


def test_act_matches_definition(rng):
    sig = Signature((3, 2, 4))
    for _ in range(100):
        g = random_element(sig, rng)
        for w in all_leaves(sig):
            assert act_on_leaf(g, w) == leaf_action(sig, g.flat, w)


def test_act_is_homomorphism(rng):
    sig = Signature((2, 3, 2))
    for _ in range(300):
        g, h = random_element(sig, rng), random_element(sig, rng)
        w = tuple(rng.randrange(d) for d in sig.orders)
        assert act_on_leaf(mul(g, h), w) == act_on_leaf(h, act_on_leaf(g, w))


@pytest.mark.parametrize("orders", [(2, 2), (2, 3), (3, 2)])
def test_action_is_faithful(orders):
    sig = Signature(orders)
    for g in all_elements(sig):
        moved = any(act_on_leaf(g, w) != w for w in all_leaves(sig))
        assert moved == (not g.is_identity())


def test_element_order_examples(sig23):
    assert element_order(identity(sig23)) == 1
    assert element_order(rooted_generator(sig23)) == 2
    assert element_order(directed_generator(sig23)) == 3


@pytest.mark.parametrize("orders", [(2, 2), (2, 3)])
def test_element_order_divides_group_order(orders):
    sig = Signature(orders)
    total = group_order(sig)
    for g in all_elements(sig):
        assert total % element_order(g) == 0


def test_group_order_examples():
    assert group_order(Signature((2,))) == 2
    assert group_order(Signature((2, 3))) == 18
    assert group_order(Signature((2, 3, 5))) == 281250
    assert group_order(Signature((7, 7, 7))) == 7 * 7**7 * 7**49


def test_closure_examples(sig23):
    e = identity(sig23)
    assert closure([e]) == {e}
    s22 = Signature((2, 2))
    assert len(closure([rooted_generator(s22), directed_generator(s22)])) == 8
    assert len(closure([rooted_generator(sig23), directed_generator(sig23)])) == 18


def test_closure_equals_enumeration():
    sig = Signature((2, 2))
    gens = [rooted_generator(sig), directed_generator(sig)]
    assert closure(gens) == set(all_elements(sig))


@pytest.mark.parametrize("orders", [(2, 3), (3, 2), (2, 3, 5)])
def test_canonical_set_generates(orders):
    sig = Signature(orders)
    assert closure_size(canonical_generators(sig), limit=group_order(sig)) == group_order(sig)


def test_full_canonical_family_generates_22():
    # (2,2) is not coprime, so build one cycle per vertex directly
    sig = Signature((2, 2))
    gens = []
    for p in range(sig.size):
        flat = [0] * sig.size
        flat[p] = 1
        gens.append(TreeElement(sig, flat))
    assert closure_size(gens) == 8


def test_closure_limit():
    sig = Signature((2, 3, 5))
    with pytest.raises(LimitExceeded):
        closure_size([rooted_generator(sig), directed_generator(sig)], limit=1000)


def test_closure_limit_from_env(monkeypatch, sig23):
    monkeypatch.setenv("WREATHLAB_LIMIT", "5")
    with pytest.raises(LimitExceeded):
        closure([rooted_generator(sig23), directed_generator(sig23)])


def test_signature_mismatch():
    with pytest.raises(ValueError):
        mul(identity(Signature((2,))), identity(Signature((3,))))


def test_tableau_validation(sig23):
    with pytest.raises(ValueError):
        TreeElement(sig23, [0, 0])
    with pytest.raises(ValueError):
        TreeElement(sig23, [2, 0, 0])
    with pytest.raises(ValueError):
        TreeElement.from_levels(sig23, [[0], [0, 0, 0]])


def test_section(sig23):
    g = TreeElement.from_levels(Signature((2, 3, 5)), [[1], [2, 1], [0, 1, 2, 3, 4, 0]])
    s = section(g, (1,))
    assert s.signature == Signature((3, 5))
    assert s.levels == ((1,), (3, 4, 0))
    assert section(g, ()) == g


def test_wide_orders_use_tuple_keys():
    sig = Signature((300,))
    g = TreeElement(sig, [1])
    assert closure_size([g]) == 300
    assert g.encode() == (1,)


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_roundtrip_and_axioms_hypothesis(data):
    orders = data.draw(st.lists(st.integers(1, 4), min_size=1, max_size=3))
    sig = Signature(tuple(orders))
    draw = lambda: TreeElement(  # noqa: E731
        sig,
        [data.draw(st.integers(0, d - 1)) for lvl, d in enumerate(sig.orders) for _ in range(sig.widths[lvl])],
    )
    a, b = draw(), draw()
    assert parse_element(str(a), sig) == a
    assert mul(a, inv(a)).is_identity()
    assert inv(mul(a, b)) == mul(inv(b), inv(a))
