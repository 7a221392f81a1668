"""Antichain enumeration: plain recursive order and gray order.

Antichains of a subposet split by the chain element they contain: a chain is
totally ordered, so an antichain holds at most one of its elements. Those
with c_i are {c_i} plus an antichain of the side subposet incomparable to
c_i, and those with none are antichains of the off-chain elements. The gray
walk runs each side family forward or backward so consecutive antichains
differ in at most three elements; a backward child ends holding its own
bottom chain element, which it returns for the caller to retire.
"""

from __future__ import annotations

from .decomp import advance, decompose, top_live
from .engine import VISIT, BasicCursor, Engine, GrayCursor, drive


def _basic_antis(eng, p, cursor, sub, memo=None):
    rec = eng.enter(sub)
    key = t0 = v0 = None
    if memo is not None and rec is not None and rec.depth >= memo.min_depth:
        key = tuple(sub)
        hit = memo.table.get(key)
        if hit is not None:
            memo.replay(eng, hit)
            eng.leave(rec)
            return None
        t0, v0 = eng.t, eng.visits
    if not sub:
        yield VISIT
    else:
        d = decompose(eng, p, sub)
        rolling = d.rise[0]
        for i in range(1, d.k + 1):
            mark = cursor.mark()
            cursor.push(d.c(i))
            yield _basic_antis(eng, p, cursor, rolling, memo)
            cursor.rollback(mark)
            if i < d.k:
                rolling = advance(eng, rolling, drops=(d.drop[i + 1],), adds=(d.rise[i],))
        yield _basic_antis(eng, p, cursor, d.off, memo)
    eng.leave(rec)
    if key is not None:
        memo.misses += 1
        memo.table[key] = (eng.t - t0, eng.visits - v0, None)
    return None


def _gray_antis(eng, p, cursor, sub, rev, memo=None):
    """Walk all antichains of sub, forward or reversed.

    Forward starts at {c_1} and ends empty, returning None. Reversed starts
    empty and ends at {c_1}, returning c_1 so the caller can clear it.
    """
    rec = eng.enter(sub)
    key = t0 = v0 = None
    if memo is not None and rec is not None and rec.depth >= memo.min_depth:
        key = (tuple(sub), rev)
        hit = memo.table.get(key)
        if hit is not None:
            out = memo.replay(eng, hit)
            eng.leave(rec)
            return out
        t0, v0 = eng.t, eng.visits
    if not sub:
        yield VISIT
        eng.leave(rec)
        if key is not None:
            memo.misses += 1
            memo.table[key] = (eng.t - t0, eng.visits - v0, None)
        return None
    d = decompose(eng, p, sub)
    k = d.k
    if not rev:
        rolling = d.rise[0]
        for i in range(1, k + 1):
            cursor.add(d.c(i))
            ret = yield _gray_antis(eng, p, cursor, rolling, True, memo)
            if ret is not None:
                cursor.remove(ret)
            cursor.remove(d.c(i))
            if i < k:
                rolling = advance(eng, rolling, drops=(d.drop[i + 1],), adds=(d.rise[i],))
        yield _gray_antis(eng, p, cursor, d.off, False, memo)
        eng.leave(rec)
        if key is not None:
            memo.misses += 1
            memo.table[key] = (eng.t - t0, eng.visits - v0, None)
        return None
    ret = yield _gray_antis(eng, p, cursor, d.off, True, memo)
    if ret is not None:
        cursor.remove(ret)
    rolling = top_live(eng, d)
    for i in range(k, 0, -1):
        cursor.add(d.c(i))
        yield _gray_antis(eng, p, cursor, rolling, False, memo)
        if i > 1:
            cursor.remove(d.c(i))
            rolling = advance(eng, rolling, drops=(d.rise[i - 1],), adds=(d.drop[i],))
    eng.leave(rec)
    out = d.chain[0]
    if key is not None:
        memo.misses += 1
        memo.table[key] = (eng.t - t0, eng.visits - v0, out)
    return out


# ------------------------------------------------------------------ public api

def basic_antichains(p, eng=None):
    """Yield every antichain of p as a frozenset, plain recursive order."""
    if eng is None:
        eng = Engine()
    cursor = BasicCursor(eng, p.n)
    gen = _basic_antis(eng, p, cursor, list(range(p.n)))
    for _ in drive(eng, gen):
        yield frozenset(cursor.as_set())


def count_antichains(p, eng=None):
    if eng is None:
        eng = Engine()
    cursor = BasicCursor(eng, p.n)
    total = 0
    for _ in drive(eng, _basic_antis(eng, p, cursor, list(range(p.n)))):
        total += 1
    return total


def gray_antichain_deltas(p, eng=None):
    """Yield (added, removed) id tuples per antichain; at most 3 per step.

    The first delta is relative to the empty set; the walk ends empty.
    """
    if eng is None:
        eng = Engine()
    cursor = GrayCursor(eng, p.n)
    gen = _gray_antis(eng, p, cursor, list(range(p.n)), False)
    return drive(eng, gen, cursor)


def gray_antichains(p, eng=None):
    """Yield every antichain of p as a frozenset, gray order."""
    cur = set()
    for added, removed in gray_antichain_deltas(p, eng):
        cur.difference_update(removed)
        cur.update(added)
        yield frozenset(cur)
