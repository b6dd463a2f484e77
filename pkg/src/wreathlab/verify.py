"""Desk-scale verification of every structural claim, as one report.

Each check compares a construction with an independent oracle (closure
enumeration, brute-force commutators/centers, a second code path) using exact
integer equality.  ``scale="small"`` caps the extra signature sweep at 1e5
elements; ``"full"`` raises it to 3e5 and multiplies the random sample sizes.
"""

from __future__ import annotations

import json
import math
import random
import time
from dataclasses import asdict, dataclass
from importlib import resources
from itertools import product

import numpy as np

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


@dataclass
class ClaimResult:
    claim: str
    paper_ref: str
    status: str  # "pass" | "fail"
    detail: str


def _result(claim, ref, ok, detail):
    return ClaimResult(claim, ref, "pass" if ok else "fail", detail)


def check_two_generators(budget_s: float = 30.0) -> ClaimResult:
    sizes = {}
    t0 = time.perf_counter()
    elapsed = 0.0
    for orders in [(2, 3), (2, 3, 5)]:
        sig = Signature(orders)
        start = time.perf_counter()
        sizes[orders] = closure_size([rooted_generator(sig), directed_generator(sig)], limit=group_order(sig))
        elapsed = time.perf_counter() - start
    ok = sizes[(2, 3)] == 18 and sizes[(2, 3, 5)] == 281250 and elapsed < budget_s
    return _result(
        "rooted + directed generate C2 wr C3 (18) and C2 wr C3 wr C5 (281250)",
        "Theorem 1",
        ok,
        f"sizes {sizes}; (2,3,5) closure {elapsed:.2f}s (budget {budget_s}s); total {time.perf_counter() - t0:.2f}s",
    )


def check_canonical_set() -> ClaimResult:
    sig = Signature((2, 3, 5))
    sigmas = canonical_generators(sig)
    shape_ok = len(sigmas) == 3
    for k, s in enumerate(sigmas):
        nonzero = [(lvl, v) for lvl, vec in enumerate(s.levels) for v in vec if v]
        shape_ok &= len(nonzero) == 1 and nonzero[0][0] == k and element_order(s) == sig.orders[k]
    size = closure_size(sigmas, limit=group_order(sig))
    return _result(
        "canonical generators of C2 wr C3 wr C5: one label per level, order i_k, generate 281250",
        "Theorem 1 (canonical set extraction)",
        shape_ok and size == 281250,
        f"sigmas {[str(s) for s in sigmas][:2]}...; closure {size}",
    )


def check_direct_product() -> ClaimResult:
    a, b = Signature((2, 3)), Signature((5,))
    pair = two_generator_direct_product(a, b)
    size = product_closure_size(pair)
    return _result(
        "two generators for W(2x3) x W(5)",
        "Theorem 2",
        size == 90,
        f"generators {pair[0]}, {pair[1]}; closure {size} (expected 90)",
    )


_COMM_INSTANCES = [(2, 2), (2, 3), (3, 2)]


def check_commutator_membership() -> ClaimResult:
    parts, ok = [], True
    for n, m in _COMM_INSTANCES:
        W = cc.TwoLevelWreath.standard(n, m)
        els = list(W.elements())
        G1 = cc.commutator_subgroup_oracle(W)
        agree = all(cc.is_in_commutator(x, W) == (x in G1) for x in els)
        good = agree and len(G1) == m ** (n - 1) and len(els) == n * m**n
        ok &= good
        parts.append(f"Z{n} wr Z{m}: {len(els)} elements, |G'|={len(G1)}, agree={agree}")
    return _result(
        "coordinate-product criterion matches brute-force commutator subgroup; |G'| = m^(n-1)",
        "conditions (2)/(3)",
        ok,
        "; ".join(parts),
    )


def check_commutator_generators() -> ClaimResult:
    W = cc.TwoLevelWreath.standard(3, 2)
    G1 = cc.commutator_subgroup_oracle(W)
    gens = cc.commutator_generators(3, 2)
    span = cc.subgroup_closure(gens, W)
    op = lambda x, y: cc.pair_mul(x, y, W)  # noqa: E731
    minimal = cc.minimal_generating_set(cc.sort_pairs(G1), op, W.identity())
    bound = cc.dprime_upper_bound(3, 1, 0, 0)
    ok = span == G1 and len(G1) == 4 and minimal is not None and len(minimal) == 2 and bound >= 2
    return _result(
        "h_1, h_2 generate (Z3 wr Z2)' (4 elements); no single element does, so d(G') = 2 = n-1",
        "Example 1, Example 2, Theorem 3",
        ok,
        f"generators {[str(g) for g in gens]}; |span|={len(span)}; minimal size "
        f"{None if minimal is None else len(minimal)}; bound {bound}",
    )


def check_abelianization() -> ClaimResult:
    parts, ok = [], True
    for n, m in _COMM_INSTANCES + [(3, 3)]:
        W = cc.TwoLevelWreath.standard(n, m)
        ab = cc.abelianization(W)
        quot = W.order() // len(cc.commutator_subgroup_oracle(W))
        cyclic = len(ab.factors) == 1
        good = quot == n * m == ab.order and cyclic == (math.gcd(n, m) == 1)
        ok &= good
        parts.append(f"Z{n} wr Z{m}: |G/G'|={quot}, factors {ab.factors}")
    ok &= cc.abelianization(cc.TwoLevelWreath.standard(2, 3)).factors == (6,)
    return _result(
        "|G/G'| = r*m; one invariant factor iff gcd(r, m) = 1",
        "Remark 1",
        ok,
        "; ".join(parts),
    )


def check_center(budget_s: float = 5.0) -> ClaimResult:
    t0 = time.perf_counter()
    faithful = cc.TwoLevelWreath.standard(2, 2)
    loose = cc.TwoLevelWreath(4, 2, 3)
    z1, o1 = cc.center(faithful), cc.center_oracle(faithful)
    z2, o2 = cc.center(loose), cc.center_oracle(loose)
    dt = time.perf_counter() - t0
    ok = z1 == o1 and len(z1) == 2 and z2 == o2 and len(z2) == 6 and dt < budget_s
    return _result(
        "center formula equals brute-force center (faithful Z2 wr Z2; Z4 on 2 points wr Z3)",
        "Proposition 1",
        ok,
        f"|Z| = {len(z1)} and {len(z2)}; oracle agrees: {z1 == o1}, {z2 == o2}; {dt:.2f}s",
    )


PRINTED_PHI_4 = np.array(
    [[0, 0, 0, -1], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]], dtype=np.int64
)


def check_phi_matrices() -> ClaimResult:
    eye = np.eye(4, dtype=np.int64)
    m_ok = np.array_equal(morse.phi_matrix(4), PRINTED_PHI_4)
    p4 = np.array_equal(morse.phi_power(4, 4), -eye)
    p8 = np.array_equal(morse.phi_power(4, 8), eye)
    return _result(
        "phi for n=4 matches the displayed matrix; phi^4 = -E, phi^8 = E",
        "phi matrices for n=4",
        m_ok and p4 and p8,
        f"matrix {m_ok}, phi^4=-E {p4}, phi^8=E {p8}",
    )


def check_relations() -> ClaimResult:
    failures = []
    count = 0
    for n in range(1, 7):
        for r in morse.check_relations(n, "signed"):
            count += 1
            if r.status == "fail":
                failures.append(f"n={n}: {r.name} ({r.detail})")
    return _result(
        "relations of H hold for n = 1..6 (signed)",
        "Theorem 4, Baumslag-Solitar relation",
        not failures,
        f"{count} relation checks; failures: {failures or 'none'}",
    )


def random_word(rng: random.Random, n: int, max_len: int = 50, max_exp: int = 3):
    length = rng.randint(0, max_len)
    out = []
    for _ in range(length):
        e = rng.randint(1, max_exp) * rng.choice((-1, 1))
        out.append((rng.randint(0, n), e))
    return out


def check_normalizer(words: int = 10_000, conjugates: int = 1_000, seed: int = 0, budget_s: float = 60.0) -> ClaimResult:
    rng = random.Random(seed)
    t0 = time.perf_counter()
    mismatches = 0
    for _ in range(words):
        n = rng.choice((2, 3, 4))
        variant = rng.choice(morse.VARIANTS)
        w = random_word(rng, n)
        if morse.normalize(w, n, variant) != morse.word_value(w, n, variant):
            mismatches += 1
    rel_fail = 0
    for n in (2, 3, 4):
        for variant in morse.VARIANTS:
            rel_fail += sum(not morse.is_trivial_word(r, n, variant) for r in morse.relators(n, variant))
    conj_fail = 0
    for _ in range(conjugates):
        n = rng.choice((2, 3, 4))
        variant = rng.choice(morse.VARIANTS)
        rels = morse.relators(n, variant)
        word = []
        for _ in range(rng.randint(1, 3)):
            u = random_word(rng, n, max_len=10)
            r = rng.choice(rels)
            if rng.random() < 0.5:
                r = morse.inverse_word(r)
            word += u + r + morse.inverse_word(u)
        conj_fail += not morse.is_trivial_word(word, n, variant)
    dt = time.perf_counter() - t0
    ok = mismatches == 0 and rel_fail == 0 and conj_fail == 0 and dt < budget_s
    return _result(
        "normalizer agrees with the multiplication fold; relators and their conjugates are trivial",
        "Theorem 4 (canonical form, transformation rule)",
        ok,
        f"{words} words, {mismatches} mismatches; relator failures {rel_fail}; "
        f"{conjugates} conjugate products, {conj_fail} failures; {dt:.2f}s",
    )


def check_center_predicates() -> ClaimResult:
    ok = True
    for n in (2, 3, 4):
        ok &= all(morse.is_central_H(morse.HElement(2 * n * t, (0,) * n), "signed") for t in range(-5, 6))
        ok &= not morse.is_central_H(morse.HElement(0, (1,) * n), "signed")
        ok &= all(
            morse.is_central_H(morse.HElement(n * t, (c,) * n), "unsigned")
            for t, c in product(range(-5, 6), repeat=2)
        )
    return _result(
        "signed: rho^(2nt) central, diagonal not; unsigned: (nt; c,...,c) central",
        "Corollary 2; Corollary 1 (see note)",
        ok,
        "note: " + morse.CENTER_DISCREPANCY_NOTE,
    )


def check_signature_sweep(limit: int) -> ClaimResult:
    """Both generating sets span the whole group for small pairwise coprime signatures."""
    primes = (2, 3, 5, 7)
    checked, bad = [], []
    for depth in (2, 3):
        for orders in product(primes, repeat=depth):
            if len(set(orders)) != depth:
                continue
            sig = Signature(orders)
            total = group_order(sig)
            if total > limit:
                continue
            ok = closure_size([rooted_generator(sig), directed_generator(sig)], limit) == total
            ok &= closure_size(canonical_generators(sig), limit) == total
            checked.append(str(sig))
            if not ok:
                bad.append(str(sig))
    return _result(
        f"two-generator and canonical sets generate every coprime signature up to {limit} elements",
        "Theorem 1",
        not bad,
        f"checked {checked}; failures {bad or 'none'}",
    )


def run_suite(scale: str = "small", seed: int = 0) -> list[ClaimResult]:
    if scale not in ("small", "full"):
        raise ValueError("scale must be 'small' or 'full'")
    full = scale == "full"
    return [
        check_two_generators(),
        check_canonical_set(),
        check_direct_product(),
        check_commutator_membership(),
        check_commutator_generators(),
        check_abelianization(),
        check_center(),
        check_phi_matrices(),
        check_relations(),
        check_normalizer(words=50_000 if full else 10_000, conjugates=5_000 if full else 1_000, seed=seed),
        check_center_predicates(),
        check_signature_sweep(300_000 if full else 100_000),
    ]


def report_json(results: list[ClaimResult]) -> str:
    return json.dumps([asdict(r) for r in results], indent=2)


def report_schema() -> dict:
    return json.loads(resources.files("wreathlab").joinpath("report_schema.json").read_text())
