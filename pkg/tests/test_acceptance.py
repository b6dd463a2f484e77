"""Acceptance gate: one test per criterion, exact integer equality throughout.

Each test prints a single ``ACCEPT <n> PASS|FAIL`` line straight to the terminal
so the gate is readable from a plain ``pytest`` run.
"""

import random
import time
from itertools import product
from math import gcd

import numpy as np
import pytest

from wreathlab import commutator as cc
from wreathlab import morse
from wreathlab.core import Signature, closure_size, element_order, group_order
from wreathlab.generators import (
    canonical_generators,
    directed_generator,
    product_closure_size,
    rooted_generator,
    two_generator_direct_product,
)
from wreathlab.verify import random_word


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, detail=""):
        with capsys.disabled():
            print(f"\nACCEPT {number:>2} {'PASS' if ok else 'FAIL'}  {title}  {detail}".rstrip())
        assert ok, detail

    return emit


def test_criterion_01_two_generators(report):
    sizes = {}
    for orders in [(2, 3), (2, 3, 5)]:
        sig = Signature(orders)
        t0 = time.perf_counter()
        sizes[orders] = closure_size([rooted_generator(sig), directed_generator(sig)], limit=group_order(sig))
    dt = time.perf_counter() - t0
    ok = sizes == {(2, 3): 18, (2, 3, 5): 281250} and dt < 30
    report(1, "rooted + directed generators", ok, f"{sizes} last closure {dt:.2f}s")


def test_criterion_02_canonical_set(report):
    sig = Signature((2, 3, 5))
    sigmas = canonical_generators(sig)
    shape = []
    for k, s in enumerate(sigmas):
        nz = [v for v in s.flat if v]
        shape.append(len(nz) == 1 and s.levels[k] != (0,) * sig.widths[k] and element_order(s) == sig.orders[k])
    size = closure_size(sigmas, limit=group_order(sig))
    ok = len(sigmas) == 3 and all(shape) and size == 281250
    report(2, "canonical generator set", ok, f"{len(sigmas)} elements, shape {shape}, closure {size}")


def test_criterion_03_direct_product(report):
    pair = two_generator_direct_product(Signature((2, 3)), Signature((5,)))
    size = product_closure_size(pair)
    report(3, "two generators of a direct product", size == 90, f"closure {size}")


def test_criterion_04_commutator_membership(report):
    # |Z2 wr Z3| = 2 * 3^2 = 18
    expected = {(2, 2): 8, (2, 3): 18, (3, 2): 24}
    parts, ok = [], True
    for (n, m), count in expected.items():
        W = cc.TwoLevelWreath.standard(n, m)
        els = list(W.elements())
        G1 = cc.commutator_subgroup_oracle(W)
        agree = all(cc.is_in_commutator(x, W) == (x in G1) for x in els)
        ok &= agree and len(els) == count and len(G1) == m ** (n - 1)
        parts.append(f"Z{n}wrZ{m}:{len(els)} |G'|={len(G1)} agree={agree}")
    report(4, "commutator membership vs oracle", ok, "; ".join(parts))


def test_criterion_05_commutator_generators(report):
    W = cc.TwoLevelWreath.standard(3, 2)
    G1 = cc.commutator_subgroup_oracle(W)
    span = cc.subgroup_closure(cc.commutator_generators(3, 2), W)
    op = lambda x, y: cc.pair_mul(x, y, W)  # noqa: E731
    single = any(cc.subgroup_closure([g], W) == G1 for g in G1)
    minimal = cc.minimal_generating_set(cc.sort_pairs(G1), op, W.identity())
    ok = span == G1 and len(G1) == 4 and not single and len(minimal) == 2
    report(5, "d(G') = n - 1 for Z3 wr Z2", ok, f"|G'|={len(G1)} single generator {single}, minimal {len(minimal)}")


def test_criterion_06_abelianization(report):
    parts, ok = [], True
    for n, m in [(2, 2), (2, 3), (3, 2), (3, 3), (2, 5)]:
        W = cc.TwoLevelWreath.standard(n, m)
        G1 = cc.commutator_subgroup_oracle(W)
        ab = cc.abelianization(W)
        cyclic = len(ab.factors) == 1
        ok &= W.order() // len(G1) == n * m == ab.order and cyclic == (gcd(n, m) == 1)
        parts.append(f"Z{n}wrZ{m}:{ab.factors}")
    ok &= cc.abelianization(cc.TwoLevelWreath.standard(2, 3)).factors == (6,)
    report(6, "|W/G'| = r*m, cyclic iff coprime", ok, " ".join(parts))


def test_criterion_07_center(report):
    t0 = time.perf_counter()
    W1 = cc.TwoLevelWreath.standard(2, 2)
    W2 = cc.TwoLevelWreath(4, 2, 3)
    z1, z2 = cc.center(W1), cc.center(W2)
    ok = z1 == cc.center_oracle(W1) and z2 == cc.center_oracle(W2)
    kernel = cc.action_kernel(W2)
    ok &= len(z1) == 2 and len(z2) == 6 == len(kernel) * 3
    dt = time.perf_counter() - t0
    ok &= dt < 5
    report(7, "center formula vs brute force", ok, f"|Z|={len(z1)},{len(z2)} {dt:.2f}s")


def test_criterion_08_phi_matrices(report):
    printed = np.array([[0, 0, 0, -1], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]])
    E = np.eye(4, dtype=np.int64)
    ok = (
        np.array_equal(morse.phi_matrix(4, "signed"), printed)
        and np.array_equal(morse.phi_power(4, 4), -E)
        and np.array_equal(morse.phi_power(4, 8), E)
    )
    report(8, "phi matrices for n = 4", ok)


def test_criterion_09_relations(report):
    failures = []
    for n in range(1, 7):
        rep = morse.check_relations(n, "signed")
        names = {r.name: r.status for r in rep}
        failures += [f"n={n}:{r.name}" for r in rep if r.status == "fail"]
        for needed in (f"r^{n} t r^-{n} = t^-1", f"t^-1 r^{2 * n} t = r^{2 * n}"):
            if names.get(needed) != "pass":
                failures.append(f"n={n}:{needed} missing")
        for i in range(1, n + 1):
            if names.get(f"r^{2 * n} t{i} r^-{2 * n} = t{i}") != "pass":
                failures.append(f"n={n}: r^2n t{i} r^-2n")
        # conjugates of t commute pairwise
        x = [morse.h_mul(morse.h_mul(morse.h_pow(morse.rho(n), i), morse.tau(1, n)), morse.h_pow(morse.rho(n), -i))
             for i in range(n)]
        for a, b in product(x, repeat=2):
            if morse.h_mul(a, b) != morse.h_mul(b, a):
                failures.append(f"n={n}: conjugates do not commute")
    report(9, "relations of H, n = 1..6 signed", not failures, ", ".join(failures[:5]))


def test_criterion_10_normalizer(report):
    rng = random.Random(2024)
    t0 = time.perf_counter()
    mismatches = 0
    for _ in range(10_000):
        n = rng.choice((2, 3, 4))
        variant = rng.choice(morse.VARIANTS)
        w = random_word(rng, n, max_len=50)
        mismatches += morse.normalize(w, n, variant) != morse.word_value(w, n, variant)
    rel_fail = sum(
        not morse.is_trivial_word(r, n, v) for n in (2, 3, 4) for v in morse.VARIANTS for r in morse.relators(n, v)
    )
    conj_fail = 0
    for _ in range(1_000):
        n = rng.choice((2, 3, 4))
        variant = rng.choice(morse.VARIANTS)
        rels = morse.relators(n, variant)
        word = []
        for _ in range(rng.randint(1, 3)):
            u = random_word(rng, n, max_len=10)
            word += u + rng.choice(rels) + morse.inverse_word(u)
        conj_fail += not morse.is_trivial_word(word, n, variant)
    dt = time.perf_counter() - t0
    ok = mismatches == 0 and rel_fail == 0 and conj_fail == 0 and dt < 60
    report(10, "normalizer soundness", ok, f"mismatch {mismatches}, relators {rel_fail}, conjugates {conj_fail}, {dt:.1f}s")


def test_criterion_11_center_predicates(report):
    ok = True
    for n in (2, 3, 4):
        ok &= all(morse.is_central_H(morse.HElement(2 * n * t, (0,) * n), "signed") for t in range(-4, 5))
        ok &= not morse.is_central_H(morse.HElement(0, (1,) * n), "signed")
        ok &= all(
            morse.is_central_H(morse.HElement(n * t, (c,) * n), "unsigned") for t, c in product(range(-4, 5), repeat=2)
        )
    report(11, "center predicates of H", ok, "(diagonal discrepancy reported by verify-all, not asserted)")
