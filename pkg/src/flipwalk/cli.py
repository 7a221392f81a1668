"""Command line front end: enumerate, audit, bench.

Exit codes: 0 on success, 2 on input errors (bad file, bad generator spec,
incompatible flags), 3 when an audit check is violated. A failing push-out
probe is reported data, not a violation, and leaves the exit code alone.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from itertools import islice

from .antichains import basic_antichains, count_antichains, gray_antichain_deltas, gray_antichains
from .audit import (
    audit_big,
    audit_run,
    check_pushout,
    constants_for,
    full_report,
    write_ledger_csv,
)
from .bench import bench_sweep, write_bench_csv
from .ideals import basic_ideals, count_ideals, gray_ideal_deltas, gray_ideals
from .poset import generate, load_poset
from .stepper import LooplessStepper

FULL_AUDIT_LIMIT = 64


class InputError(Exception):
    pass


def _load(args):
    if args.infile and args.gen:
        raise InputError("give --in or --gen, not both")
    try:
        if args.infile:
            return load_poset(args.infile)
        if args.gen:
            spec = args.gen
            if args.seed is not None and spec.startswith("random:") and spec.count(",") == 1:
                spec = "%s,%d" % (spec, args.seed)
            return generate(spec)
    except (OSError, ValueError, TypeError) as e:
        raise InputError(str(e))
    raise InputError("need --in FILE or --gen KIND:PARAMS")


def _fmt_set(s):
    if not s:
        return "."
    return " ".join(str(u) for u in sorted(s))


def _fmt_delta(added, removed):
    toks = ["+%d" % u for u in added] + ["-%d" % u for u in removed]
    return " ".join(toks) if toks else "."


def _open_out(path):
    if path is None:
        return sys.stdout, False
    return open(path, "w"), True


def cmd_enumerate(args):
    p = _load(args)
    if args.loopless and args.order != "gray":
        raise InputError("--loopless implies gray order")
    if args.count:
        n = count_ideals(p) if args.kind == "ideals" else count_antichains(p)
        print(n)
        return 0
    out, close = _open_out(args.out)
    try:
        if args.deltas or args.loopless:
            if args.order != "gray":
                raise InputError("delta output needs gray order")
            if args.loopless:
                stream = iter(LooplessStepper(p, args.kind))
            else:
                stream = gray_ideal_deltas(p) if args.kind == "ideals" else gray_antichain_deltas(p)
            if args.deltas:
                for added, removed in stream:
                    out.write(_fmt_delta(added, removed) + "\n")
            else:
                cur = set()
                for added, removed in stream:
                    cur.difference_update(removed)
                    cur.update(added)
                    out.write(_fmt_set(cur) + "\n")
        else:
            if args.order == "gray":
                sets = gray_ideals(p) if args.kind == "ideals" else gray_antichains(p)
            else:
                sets = basic_ideals(p) if args.kind == "ideals" else basic_antichains(p)
            for s in sets:
                out.write(_fmt_set(s) + "\n")
    finally:
        if close:
            out.close()
    return 0


def _parse_pushout(tokens):
    vals = {}
    for tok in tokens:
        key, _, val = tok.partition("=")
        if key not in ("alpha", "beta") or not val:
            raise InputError("push-out wants alpha=A beta=B, got %r" % tok)
        try:
            vals[key] = float(val)
        except ValueError:
            raise InputError("bad push-out value %r" % tok)
    if set(vals) != {"alpha", "beta"}:
        raise InputError("push-out needs both alpha= and beta=")
    if vals["alpha"] <= 1:
        raise InputError("push-out alpha must exceed 1")
    return vals["alpha"], vals["beta"]


def cmd_audit(args):
    p = _load(args)
    c = constants_for(args.kind)
    try:
        if args.mu is not None:
            c = replace(c, mu=args.mu)
        if args.tstar is not None:
            c = replace(c, tstar=args.tstar)
    except AssertionError:
        raise InputError("constant overrides break mu >= alpha + beta + 1")
    if p.n <= FULL_AUDIT_LIMIT:
        led = audit_run(p, args.kind, args.order, c=c)
    else:
        print(
            "note: n=%d exceeds the full-audit bound %d; replaying repeated "
            "shapes, visit-gap checks skipped" % (p.n, FULL_AUDIT_LIMIT),
            file=sys.stderr,
        )
        led = audit_big(p, args.kind, args.order, c=c)
    rep = full_report(led)
    bad = 0
    for name in ("pyramid", "subtree", "gap", "pairs"):
        if name not in rep:
            continue
        viol = rep[name]
        if viol:
            bad += len(viol)
            print("check %s: FAIL (%d violations)" % (name, len(viol)))
            for v in viol[:5]:
                print("  %s" % (v,))
        else:
            print("check %s: ok" % name)
    line = "nodes=%d ticks=%d visits=%d" % (len(led.rows), led.total_ticks, led.total_visits)
    if led.complete:
        # replayed runs never measure descent depth, so no number to report
        line += " deepest_descent=%d" % led.delta
    print(line)
    if args.pushout:
        alpha, beta = _parse_pushout(args.pushout)
        po = check_pushout(led, alpha, beta)
        state = "violated" if po["root_violated"] else "held"
        ratio = "none" if po["root_ratio"] is None else "%.6e" % po["root_ratio"]
        print(
            "push-out alpha=%g beta=%g: root %s, slack=%s, dominance_ratio=%s, "
            "failing_nodes=%d/%d"
            % (alpha, beta, state, po["root_slack"], ratio,
               len(po["violations"]), len(po["rows"]))
        )
    if args.out:
        write_ledger_csv(led, args.out)
    return 3 if bad else 0


def cmd_bench(args):
    if args.loopless and args.order != "gray":
        raise InputError("--loopless implies gray order")
    try:
        sizes = tuple(int(tok) for tok in args.sizes.split(","))
    except ValueError:
        raise InputError("bad --sizes %r" % args.sizes)
    rows = bench_sweep(
        kind=args.kind,
        loopless=args.loopless,
        sizes=sizes,
        limit=args.limit,
        seed=args.seed if args.seed is not None else 1,
    )
    if args.out:
        write_bench_csv(rows, args.out)
    else:
        write_bench_csv(rows, "/dev/stdout")
    return 0


def _add_source_flags(sp):
    sp.add_argument("--in", dest="infile", metavar="PATH", help="poset file")
    sp.add_argument("--gen", metavar="KIND:PARAMS",
                    help="generated poset, e.g. chain:8, antichain:10, random:30,0.2,7, uno:16")
    sp.add_argument("--kind", choices=("ideals", "antichains"), default="ideals")
    sp.add_argument("--order", choices=("gray", "basic"), default="gray")
    sp.add_argument("--seed", type=int, default=None)


def build_parser():
    ap = argparse.ArgumentParser(prog="flipwalk")
    sub = ap.add_subparsers(dest="cmd", required=True)

    sp = sub.add_parser("enumerate", help="stream every ideal or antichain")
    _add_source_flags(sp)
    sp.add_argument("--count", action="store_true", help="print only the number of sets")
    sp.add_argument("--deltas", action="store_true", help="print per-step changes, not sets")
    sp.add_argument("--loopless", action="store_true", help="pace the stream through the stepper")
    sp.add_argument("--out", metavar="PATH")
    sp.set_defaults(fn=cmd_enumerate)

    sp = sub.add_parser("audit", help="run and certify the per-node tick budget")
    _add_source_flags(sp)
    sp.add_argument("--tstar", type=int, default=None, help="override ticks per potential unit")
    sp.add_argument("--mu", type=int, default=None, help="override the per-visit allowance")
    sp.add_argument("--pushout", nargs=2, metavar=("alpha=A", "beta=B"),
                    help="also probe the geometric children bound")
    sp.add_argument("--out", metavar="PATH", help="write the per-node ledger CSV here")
    sp.set_defaults(fn=cmd_audit)

    sp = sub.add_parser("bench", help="sweep scaling families and emit CSV")
    sp.add_argument("--kind", choices=("ideals", "antichains"), default="ideals")
    sp.add_argument("--order", choices=("gray", "basic"), default="gray")
    sp.add_argument("--loopless", action="store_true")
    sp.add_argument("--sizes", default="50,100,200,400")
    sp.add_argument("--limit", type=int, default=10_000)
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--out", metavar="PATH")
    sp.set_defaults(fn=cmd_bench)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except InputError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
