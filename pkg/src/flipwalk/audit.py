"""Per-node certification of enumeration runs against the potential budget.

Every recorded frame carries its measured subtree ticks and visit count. The
checks here confirm, in exact integer arithmetic, that those measurements sit
under the budget a potential function promises: each node's potential plus a
fixed allowance per visit pays for its whole subtree. The potential of a
subposet is an affine combination of its size, its incomparable-pair count,
and its 3-antichain count; the per-kind coefficient rows below are what the
walkers were tuned against.

Runs come in two flavors. audit_run executes the walk for real (cursor and
all) and keeps every frame, so gap and pair checks apply. audit_big replays
repeated frame shapes from a memo table: totals and spans stay exact, every
distinct frame shape still gets executed and recorded once with all its
children, but the visit-time series has holes, so only per-node checks apply.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .antichains import _basic_antis, _gray_antis
from .decomp import decompose, side_anti, side_ideal
from .engine import BasicCursor, Engine, GrayCursor, Memo, NullCursor, drive
from .ideals import EMPTY, FULL, _basic_ideals, _gray_ideals
from .poset import compute_stats


@dataclass(frozen=True)
class PotentialConstants:
    alpha: int  # constant term
    beta: int  # per element
    gamma: int  # per incomparable pair
    delta: int  # per 3-antichain
    mu: int  # allowance per visit
    tstar: int = 8  # tick value of one potential unit

    def __post_init__(self):
        assert min(self.alpha, self.beta, self.gamma, self.delta, self.mu) > 0
        assert self.tstar > 0
        assert self.mu >= self.alpha + self.beta + 1


IDEAL_CONSTANTS = PotentialConstants(alpha=922, beta=921, gamma=385, delta=192, mu=1844)
ANTICHAIN_CONSTANTS = PotentialConstants(alpha=196, beta=195, gamma=97, delta=96, mu=392)


def constants_for(kind):
    return IDEAL_CONSTANTS if kind == "ideals" else ANTICHAIN_CONSTANTS


def potential(stats, c):
    return c.alpha + c.beta * stats.n + c.gamma * stats.q + c.delta * stats.t


def structural_sides(p, sub, kind, eng=None):
    """Decompose sub and return (decomp, side subposets) for the given kind.

    The sides are the subproblems the recursion hands to its children, read
    straight off a fresh decomposition: the straddle sets per chain position
    for ideals, the incomparability sets plus the off-chain part for
    antichains. Ticks go to a scratch engine, not the measured one.
    """
    if eng is None:
        eng = Engine()
    d = decompose(eng, p, list(sub))
    if kind == "ideals":
        sides = [tuple(side_ideal(eng, d, i)) for i in range(d.k + 1)]
    else:
        sides = [tuple(side_anti(eng, d, i)) for i in range(1, d.k + 1)]
        sides.append(tuple(d.off))
    return d, sides


class AuditLedger:
    """Recorded frames of one run plus cached per-subposet statistics."""

    def __init__(self, p, kind, order, c, eng, complete, memo=None):
        self.p = p
        self.kind = kind
        self.order = order
        self.c = c
        self.complete = complete
        self.memo = memo
        self.total_ticks = eng.t
        self.total_visits = eng.visits
        self.visit_times = eng.visit_times
        self.delta = eng.maxpath
        self.rows = sorted(eng.recs, key=lambda r: r.nid)
        self.kids = {}
        for rec in self.rows:
            if rec.parent >= 0:
                self.kids.setdefault(rec.parent, []).append(rec)
        self._stats = {}
        self._phi = {}

    @property
    def root(self):
        return self.rows[0]

    def stats(self, sub):
        st = self._stats.get(sub)
        if st is None:
            st = compute_stats(self.p, sub)
            self._stats[sub] = st
        return st

    def phi(self, sub):
        v = self._phi.get(sub)
        if v is None:
            v = potential(self.stats(sub), self.c)
            self._phi[sub] = v
        return v

    def distinct_subs(self):
        seen = set()
        for rec in self.rows:
            s = rec.sub
            if s and s not in seen:
                seen.add(s)
                yield s


def _walker(kind, order, eng, p, cursor, memo):
    sub = list(range(p.n))
    if kind == "ideals":
        if order == "gray":
            return _gray_ideals(eng, p, cursor, sub, 1, (EMPTY, None), (FULL, None), memo)
        return _basic_ideals(eng, p, cursor, sub, memo)
    if order == "gray":
        return _gray_antis(eng, p, cursor, sub, False, memo)
    return _basic_antis(eng, p, cursor, sub, memo)


def audit_run(p, kind="ideals", order="gray", c=None):
    """Execute the walk for real and record every frame.

    Gray runs go through a live gray cursor, so the three-element step bound
    is asserted on the way. The result supports every check, including the
    visit-gap and pair-partition ones.
    """
    if c is None:
        c = constants_for(kind)
    eng = Engine(record=True, measure_path=True)
    if order == "gray":
        cursor = GrayCursor(eng, p.n)
        for _ in drive(eng, _walker(kind, order, eng, p, cursor, None), cursor):
            pass
    else:
        cursor = BasicCursor(eng, p.n)
        for _ in drive(eng, _walker(kind, order, eng, p, cursor, None)):
            pass
    return AuditLedger(p, kind, order, c, eng, complete=True)


def audit_big(p, kind="ideals", order="gray", c=None, min_depth=0, record_depth=None):
    """Audit a run too large to execute, replaying repeated frame shapes.

    A frame's subtree cost and return value depend only on its call
    arguments, so each distinct shape is executed and recorded once and later
    occurrences charge the stored totals. Every executed frame still has all
    its children on record (replayed ones appear as childless rows with exact
    span and visits), which is what the per-node checks need. Visit times are
    not representative, so gap checks refuse these ledgers.

    record_depth keeps only rows down to that depth; use it when the shape
    table alone pushes memory and only the top of the forest matters.
    """
    if c is None:
        c = constants_for(kind)
    eng = Engine(record=True, record_depth=record_depth)
    memo = Memo(min_depth)
    cursor = NullCursor(eng)
    for _ in drive(eng, _walker(kind, order, eng, p, cursor, memo)):
        pass
    return AuditLedger(p, kind, order, c, eng, complete=False, memo=memo)


# ------------------------------------------------------------------- checks

def check_pyramid(led):
    """Per-node budget checks; returns counts and any violations.

    Three forms, all exact integers, all required to hold at every node:
    leaf frames fit inside the per-visit allowance; inner frames' measured
    subtree ticks stay under tstar times (children potential sum + allowance
    for the subtree's visits - own potential); and structurally, the side
    subposets of any nonempty subposet jointly carry at least n + q more
    potential than the subposet itself, which is the inequality that makes
    the previous one self-sustaining down the tree.
    """
    c = led.c
    violations = []
    weak = leaf = strong = 0
    for rec in led.rows:
        if not rec.sub:
            leaf += 1
            lhs = c.tstar * (c.mu - c.alpha)
            if lhs < rec.span:
                violations.append((rec.nid, "leaf", lhs, rec.span))
            continue
        kids = led.kids.get(rec.nid)
        if not kids:
            continue  # replayed occurrence; its shape was checked when first run
        weak += 1
        tot = 0
        for kid in kids:
            tot += led.phi(kid.sub)
        lhs = c.tstar * (tot + c.mu * rec.sub_visits - led.phi(rec.sub))
        if lhs < rec.span:
            violations.append((rec.nid, "weak", lhs, rec.span))
    for s in led.distinct_subs():
        strong += 1
        _, sides = structural_sides(led.p, s, led.kind)
        tot = sum(led.phi(t) for t in sides)
        st = led.stats(s)
        lhs = tot - led.phi(s)
        rhs = st.n + st.q
        if lhs < rhs:
            violations.append((s, "strong", lhs, rhs))
    return {"violations": violations, "weak": weak, "strong": strong, "leaf": leaf}


def strong_slack(p, sub, kind, c=None):
    """Potential gained by decomposing sub, minus nothing: sum phi(sides) - phi(sub)."""
    if c is None:
        c = constants_for(kind)
    _, sides = structural_sides(p, sub, kind)
    tot = sum(potential(compute_stats(p, s), c) for s in sides)
    return tot - potential(compute_stats(p, sub), c)


def check_subtree(led):
    """Subtree ticks of every frame stay under tstar * (mu * visits - phi)."""
    c = led.c
    violations = []
    for rec in led.rows:
        lhs = c.tstar * (c.mu * rec.sub_visits - led.phi(rec.sub))
        if lhs < rec.span:
            violations.append((rec.nid, "subtree", lhs, rec.span))
    return violations


def check_gap(led):
    """Visit-time bounds for complete runs, linear scan with a running min.

    With step budget m = mu * tstar and d the measured deepest root-leaf own
    cost: the j-th visit (1-indexed) happens by tick j*m + d - 1, and any two
    visits i < j are at most (j - i)*m + 2d - 1 ticks apart. The pairwise
    family reduces to max_j ((v_j - j*m) - min_{i<j}(v_i - i*m)) <= 2d - 1.
    """
    assert led.complete, "gap bounds need a fully executed run"
    c = led.c
    m = c.mu * c.tstar
    d = led.delta
    violations = []
    best = None
    worst = None
    for j, v in enumerate(led.visit_times, 1):
        if v > j * m + d - 1:
            violations.append((j, "first", v, j * m + d - 1))
        key = v - j * m
        if best is not None and key - best > 2 * d - 1:
            violations.append((j, "gap", key - best, 2 * d - 1))
        if worst is None or key - best > worst:
            worst = key - best if best is not None else 0
        if best is None or key < best:
            best = key
    return violations


def check_pair_bound(led):
    """Partition each subposet's incomparable pairs and bound the remainder.

    Pairs touching the chain, then pairs of off-chain elements that share a
    chain element incomparable to both (their fence intervals overlap in an
    interior point), are structurally accounted. The rest must number at most
    96 * sum over sides of (3-antichain count + size).
    """
    violations = []
    checked = 0
    p = led.p
    for s in led.distinct_subs():
        checked += 1
        d, sides = structural_sides(p, s, led.kind)
        fl = d.fence_low
        fh = d.fence_high
        chain = set(d.chain)
        off = d.off
        q3 = 0
        for i, u in enumerate(off):
            for v in off[i + 1:]:
                if not p.incomparable(u, v):
                    continue
                if max(fl[u], fl[v]) + 1 < min(fh[u], fh[v]):
                    continue
                q3 += 1
        rhs = 0
        for t in sides:
            st = led.stats(t)
            rhs += st.t + st.n
        rhs *= 96
        if q3 > rhs:
            violations.append((s, "pairs", q3, rhs))
    return violations


def check_aux(a, b):
    """Counting inequality behind the pair bound, on positive int vectors."""
    lhs = 48 * sum(j * (comb(x, 3) + 1) for j, x in enumerate(a, 1))
    lhs += 48 * sum(j * (comb(x, 3) + 1) for j, x in enumerate(b, 1))
    return lhs >= sum(a) * sum(b)


def check_pushout(led, alpha, beta, tstar=None):
    """Per-inner-node surplus test of children ticks against a geometric bound.

    At each executed inner frame X with children C: require
    sum_C ticks >= alpha * ticks(X) - beta * (|C| + 1) * tstar.
    Exact rational arithmetic; alpha may be fractional. Also reports the
    root's dominance ratio: the root's children ticks excluding the heaviest
    child, over the root's own subtree ticks.
    """
    if tstar is None:
        tstar = led.c.tstar
    al = Fraction(alpha)
    be = Fraction(beta)
    rows = []
    violations = []
    root_slack = None
    for rec in led.rows:
        kids = led.kids.get(rec.nid)
        if not rec.sub or not kids:
            continue
        lhs = sum(k.span for k in kids)
        rhs = al * rec.span - be * (len(kids) + 1) * tstar
        slack = lhs - rhs
        rows.append((rec.nid, rec.depth, len(rec.sub), lhs, float(slack)))
        if slack < 0:
            violations.append((rec.nid, rec.depth, len(rec.sub), float(slack)))
        if rec.parent < 0:
            root_slack = slack
    root = led.root
    kids = led.kids.get(root.nid, ())
    spans = sorted((k.span for k in kids), reverse=True)
    ratio = None
    if spans and root.span:
        ratio = float(Fraction(sum(spans) - spans[0], root.span))
    return {
        "alpha": alpha,
        "beta": beta,
        "rows": rows,
        "violations": violations,
        "root_slack": None if root_slack is None else float(root_slack),
        "root_violated": root_slack is not None and root_slack < 0,
        "root_ratio": ratio,
    }


def pushout_pyramid_check(led, alpha, beta, tstar=None):
    """Where the push-out test passes, a derived potential must be pyramidal.

    Setting psi(X) = ticks(X) / ((alpha-1)*tstar) + 3*beta/(alpha-1), every
    node passing check_pushout with at least two children must satisfy
    sum psi(children) - psi(X) >= ticks(X) / tstar. Violations of this
    implication would mean the two certifications disagree.
    """
    if tstar is None:
        tstar = led.c.tstar
    al = Fraction(alpha)
    be = Fraction(beta)
    scale = (al - 1) * tstar
    base = 3 * be / (al - 1)
    violations = []
    checked = 0
    for rec in led.rows:
        kids = led.kids.get(rec.nid)
        if not rec.sub or not kids or len(kids) < 2:
            continue
        lhs = sum(k.span for k in kids)
        if lhs < al * rec.span - be * (len(kids) + 1) * tstar:
            continue  # push-out fails here; implication says nothing
        checked += 1
        psis = sum(Fraction(k.span) / scale + base for k in kids)
        own = Fraction(rec.span) / scale + base
        if psis - own < Fraction(rec.span, tstar):
            violations.append((rec.nid, float(psis - own), rec.span / tstar))
    return {"checked": checked, "violations": violations}


def write_ledger_csv(led, path):
    with open(path, "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["node_id", "parent_id", "depth", "n", "q", "t", "phi", "ticks", "visits"])
        for rec in led.rows:
            st = led.stats(rec.sub)
            w.writerow([
                rec.nid,
                rec.parent,
                rec.depth,
                st.n,
                st.q,
                st.t,
                led.phi(rec.sub),
                rec.span,
                rec.sub_visits,
            ])


def full_report(led):
    """Run every check the ledger supports; map of check name to violations."""
    out = {"pyramid": check_pyramid(led)["violations"], "subtree": check_subtree(led)}
    if led.complete:
        out["gap"] = check_gap(led)
        out["pairs"] = check_pair_bound(led)
    return out
