"""Command-line front end.

Exit codes: 0 success, 1 verification failure (or closure limit hit), 2 usage
or parse error.  ``--json`` switches every subcommand to machine-readable
output; element sets are sorted by their canonical encoding.
"""

from __future__ import annotations

import argparse
import json
import sys

from wreathlab import commutator as cc
from wreathlab import core, generators, literals, morse, verify
from wreathlab.core import LimitExceeded


class UsageError(Exception):
    pass


def _emit(args, text_lines, payload):
    if args.json:
        print(json.dumps(payload))
    else:
        for line in text_lines:
            print(line)


def _sig(args):
    return literals.parse_signature(args.sig)


def _elements(args, sig, texts):
    return [literals.parse_element(t, sig) for t in texts]


def _limit(args):
    return args.limit if args.limit is not None else core.default_limit()


def _wreath(args):
    n = args.n if args.n is not None else args.r
    return cc.TwoLevelWreath(args.r, n, args.m, step=args.step)


def _pair(text, W):
    top, base = literals.parse_pair(text)
    return W.check(cc.WreathPair(top, base))


def _variant(args):
    return "unsigned" if args.unsigned else "signed"


def _h(text, n):
    k, s = literals.parse_h_literal(text)
    if len(s) != n:
        raise UsageError(f"element {text!r} has {len(s)} coordinates, expected {n}")
    return morse.HElement(k, s)


# --- wreath-core -------------------------------------------------------------

def cmd_mul(args):
    sig = _sig(args)
    els = _elements(args, sig, args.elements)
    out = core.identity(sig)
    for g in els:
        out = core.mul(out, g)
    _emit(args, [str(out)], out.to_json())
    return 0


def cmd_inv(args):
    sig = _sig(args)
    (g,) = _elements(args, sig, [args.element])
    out = core.inv(g)
    _emit(args, [str(out)], out.to_json())
    return 0


def cmd_order(args):
    sig = _sig(args)
    if args.element is None:
        total = core.group_order(sig)
        _emit(args, [str(total)], {"group_order": total})
    else:
        (g,) = _elements(args, sig, [args.element])
        k = core.element_order(g)
        _emit(args, [str(k)], {"element_order": k})
    return 0


def cmd_act(args):
    sig = _sig(args)
    (g,) = _elements(args, sig, [args.element])
    leaf = [int(x) for x in args.leaf.split(",")]
    out = core.act_on_leaf(g, leaf)
    _emit(args, [",".join(map(str, out))], list(out))
    return 0


def cmd_closure(args):
    sig = _sig(args)
    gens = _elements(args, sig, args.generators)
    if args.count:
        size = core.closure_size(gens, _limit(args))
        _emit(args, [str(size)], {"size": size})
    else:
        els = sorted(core.closure(gens, _limit(args)), key=lambda g: g.encode())
        _emit(args, [str(g) for g in els], [g.to_json() for g in els])
    return 0


def cmd_gens(args):
    sig = _sig(args)
    if args.product is not None:
        other = literals.parse_signature(args.product)
        pair = generators.two_generator_direct_product(sig, other)
        _emit(
            args,
            [str(p) for p in pair],
            [[p.left.to_json(), p.right.to_json()] for p in pair],
        )
        return 0
    if args.canonical:
        els = generators.canonical_generators(sig)
    elif args.recursive:
        els = generators.recursive_generators(sig, args.recursive)
    elif args.rooted:
        els = [generators.rooted_generator(sig)]
    elif args.directed:
        els = [generators.directed_generator(sig)]
    else:
        els = [generators.rooted_generator(sig), generators.directed_generator(sig)]
    _emit(args, [str(g) for g in els], [g.to_json() for g in els])
    return 0


def cmd_verify_gen(args):
    sig = _sig(args)
    if args.generators:
        gens = _elements(args, sig, args.generators)
    elif args.canonical:
        gens = generators.canonical_generators(sig)
    else:
        gens = [generators.rooted_generator(sig), generators.directed_generator(sig)]
    ok = generators.verify_generation(gens, sig, _limit(args))
    _emit(args, ["generates" if ok else "does not generate"], {"generates": ok, "group_order": core.group_order(sig)})
    return 0 if ok else 1


# --- commutator-center -------------------------------------------------------

def cmd_comm_test(args):
    W = _wreath(args)
    x = _pair(args.element, W)
    ok = cc.is_in_commutator(x, W)
    _emit(args, [str(ok).lower()], {"in_commutator": ok})
    return 0


def cmd_comm_gens(args):
    gens = cc.commutator_generators(args.n, args.m)
    _emit(args, [str(g) for g in gens], [[g.top, list(g.base)] for g in gens])
    return 0


def cmd_abelianize(args):
    W = _wreath(args)
    ab = cc.abelianization(W)
    text = " x ".join(f"Z{f}" for f in ab.factors) or "trivial"
    _emit(args, [text], {"factors": list(ab.factors), "order": ab.order})
    return 0


def cmd_center(args):
    W = _wreath(args)
    zs = cc.center_oracle(W, _limit(args)) if args.oracle else cc.center(W)
    zs = cc.sort_pairs(zs)
    _emit(args, [str(z) for z in zs], [[z.top, list(z.base)] for z in zs])
    return 0


# --- morse-orbit -------------------------------------------------------------

def cmd_h_mul(args):
    v = _variant(args)
    out = morse.h_identity(args.n)
    for t in args.elements:
        out = morse.h_mul(out, _h(t, args.n), v)
    _emit(args, [str(out)], [out.k, list(out.s)])
    return 0


def cmd_h_normalize(args):
    word = literals.parse_word(" ".join(args.word))
    out = morse.normalize(word, args.n, _variant(args))
    _emit(args, [str(out)], [out.k, list(out.s)])
    return 0


def cmd_h_trivial(args):
    word = literals.parse_word(" ".join(args.word))
    ok = morse.is_trivial_word(word, args.n, _variant(args))
    _emit(args, [str(ok).lower()], {"trivial": ok})
    return 0


def cmd_h_relations(args):
    report = morse.check_relations(args.n, _variant(args))
    _emit(
        args,
        [f"{r.status.upper():5} {r.name}  [{r.detail}]" for r in report],
        [r._asdict() for r in report],
    )
    return 0 if morse.relations_hold(report) else 1


def cmd_h_central(args):
    x = _h(args.element, args.n)
    ok = morse.is_central_H(x, _variant(args))
    _emit(args, [str(ok).lower()], {"central": ok})
    return 0


def cmd_verify_all(args):
    results = verify.run_suite(args.scale, seed=args.seed)
    if args.json:
        print(verify.report_json(results))
    else:
        for r in results:
            print(f"{r.status.upper():4}  {r.claim}  ({r.paper_ref})")
            print(f"      {r.detail}")
    return 0 if all(r.status == "pass" for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    p = argparse.ArgumentParser(prog="wreathlab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_, parents=[common])
        sp.set_defaults(func=func)
        return sp

    def with_sig(sp):
        sp.add_argument("--sig", required=True, help="signature such as 2x3x5")
        return sp

    def with_limit(sp):
        sp.add_argument("--limit", type=int, default=None, help="closure size cap (default $WREATHLAB_LIMIT or 1e6)")
        return sp

    sp = with_sig(add("mul", cmd_mul, "product of tableau literals, left to right"))
    sp.add_argument("elements", nargs="+")
    sp = with_sig(add("inv", cmd_inv, "inverse of a tableau"))
    sp.add_argument("element")
    sp = with_sig(add("order", cmd_order, "element order, or group order with no element"))
    sp.add_argument("element", nargs="?")
    sp = with_sig(add("act", cmd_act, "image of a leaf word"))
    sp.add_argument("element")
    sp.add_argument("--leaf", required=True, help="comma-separated digits")
    sp = with_limit(with_sig(add("closure", cmd_closure, "subgroup generated by tableaux")))
    sp.add_argument("generators", nargs="+")
    sp.add_argument("--count", action="store_true", help="print only the size")

    sp = with_sig(add("gens", cmd_gens, "rooted/directed, canonical or recursive generators"))
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--canonical", action="store_true")
    g.add_argument("--rooted", action="store_true")
    g.add_argument("--directed", action="store_true")
    g.add_argument("--recursive", choices=("quotient", "power"))
    g.add_argument("--product", metavar="SIG", help="two generators of W(--sig) x W(SIG)")
    sp = with_limit(with_sig(add("verify-gen", cmd_verify_gen, "check that generators span the whole group")))
    sp.add_argument("generators", nargs="*")
    sp.add_argument("--canonical", action="store_true")

    def with_wreath(sp):
        sp.add_argument("--r", type=int, required=True, help="active cyclic order")
        sp.add_argument("--n", type=int, default=None, help="size of X (default r)")
        sp.add_argument("--m", type=int, required=True, help="passive cyclic order")
        sp.add_argument("--step", type=int, default=1, help="a acts as x -> x + a*step mod n")
        return sp

    sp = with_wreath(add("comm-test", cmd_comm_test, "membership in the commutator subgroup"))
    sp.add_argument("element", help="pair literal (a; b1,...,bn)")
    sp = add("comm-gens", cmd_comm_gens, "generators of (Z_n wr Z_m)'")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    with_wreath(add("abelianize", cmd_abelianize, "invariant factors of W/W'"))
    sp = with_limit(with_wreath(add("center", cmd_center, "center of W")))
    sp.add_argument("--oracle", action="store_true", help="brute force instead of the formula")

    def with_h(sp):
        sp.add_argument("--n", type=int, required=True, help="rank")
        v = sp.add_mutually_exclusive_group()
        v.add_argument("--signed", action="store_true", help="signed shift (default)")
        v.add_argument("--unsigned", action="store_true")
        return sp

    sp = with_h(add("h-mul", cmd_h_mul, "product of (k; s1,...,sn) literals"))
    sp.add_argument("elements", nargs="+")
    sp = with_h(add("h-normalize", cmd_h_normalize, "normal form of a word"))
    sp.add_argument("word", nargs="*")
    sp = with_h(add("h-trivial", cmd_h_trivial, "is the word trivial in H"))
    sp.add_argument("word", nargs="*")
    with_h(add("h-relations", cmd_h_relations, "check the defining relations"))
    sp = with_h(add("h-central", cmd_h_central, "is the element central"))
    sp.add_argument("element")

    sp = add("verify-all", cmd_verify_all, "run the verification suite")
    sp.add_argument("--scale", choices=("small", "full"), default="small")
    sp.add_argument("--seed", type=int, default=0)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (literals.ParseError, UsageError, ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except LimitExceeded as exc:
        print(f"limit: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
