"""Ideal (downset) enumeration: plain recursive order and gray order.

Both walks recurse over the same family of side subposets from the chain
decomposition: ideals whose highest chain element is c_i are the downset of
c_i plus an ideal of the side subposet at i. The basic walk takes the blocks
bottom up with an explicit rollback trail. The gray walk snakes through the
blocks so that consecutive ideals differ in at most three elements, steering
each child frame by a (first, last) pair of boundary forms.

A form is (anchor, delta): anchor is EMPTY or FULL (of the frame's subposet),
delta is None for the anchor itself, a non-empty ascending id list for an
explicit offset from the anchor, or PERTURB meaning "anchor adjusted by one
element of the frame's choosing". Every call keeps at least one end of the
frame syntactically exact; the dispatch loop flips a frame to enumerate
complements in the reversed order relation until its fixed end is anchored at
FULL, then runs the block table forward or reversed. Empty deltas canonicalize
to exact anchors, which is what keeps the dispatch invariant alive.
"""

from __future__ import annotations

from .decomp import advance, decompose, side_ideal, split_top, top_live
from .engine import VISIT, BasicCursor, Engine, GrayCursor, drive

EMPTY, FULL = 0, 1
PERTURB = object()

LAST_END, FIRST_END, NO_END = 0, 1, 2


def form(anchor, ids):
    """Canonicalize: empty offset means the exact anchor."""
    return (anchor, list(ids) or None)


class Block:
    __slots__ = ("entry", "source", "first", "last", "pend", "rev_init")

    def __init__(self, entry, source, first, last, pend, rev_init=None):
        self.entry = entry
        self.source = source
        self.first = first
        self.last = last
        self.pend = pend
        self.rev_init = rev_init


# ------------------------------------------------------------------ basic walk

def _basic_ideals(eng, p, cursor, sub, memo=None):
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
        mark = cursor.mark()
        rolling = d.rise[0]
        yield _basic_ideals(eng, p, cursor, rolling, memo)
        for i in range(1, d.k + 1):
            rolling = advance(eng, rolling, drops=(d.drop[i],), adds=(d.rise[i],))
            cursor.push(d.c(i))
            for u in d.drop[i]:
                cursor.push(u)
            yield _basic_ideals(eng, p, cursor, rolling, memo)
        cursor.rollback(mark)
    eng.leave(rec)
    if key is not None:
        memo.misses += 1
        memo.table[key] = (eng.t - t0, eng.visits - v0, None)
    return None


# ------------------------------------------------------------------- gray walk

def _zeta(eng, d, J):
    """Index of the block containing ideal J: its highest chain element."""
    ja, ids = J
    if ids is None:
        assert ja == EMPTY
        return 0
    if ja == EMPTY:
        z = 0
        pos = d.chain_pos
        for u in ids:
            eng.tick()
            i = pos.get(u, 0)
            if i > z:
                z = i
        return z
    idset = set()
    for u in ids:
        eng.tick()
        idset.add(u)
    z = d.k
    while z >= 1:
        eng.tick()
        if d.chain[z - 1] in idset:
            z -= 1
        else:
            break
    return z


def _translate(eng, d, J, z):
    """Rewrite ideal J of the frame as an ideal of the side subposet at z."""
    ja, ids = J
    if ids is None:
        return (ja, None)
    out = []
    if ja == EMPTY:
        pos = d.chain_pos
        fh = d.fence_high
        for u in ids:
            eng.tick()
            if u not in pos and fh[u] > z:
                out.append(u)
    else:
        pos = d.chain_pos
        fl = d.fence_low
        fh = d.fence_high
        for u in ids:
            eng.tick()
            if u not in pos and fl[u] <= z <= fh[u] - 1:
                out.append(u)
    return form(ja, out)


def _merge_form(eng, a, b):
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    while i < len(a) and j < len(b):
        eng.tick()
        if a[i] < b[j]:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    if i < len(a):
        eng.tick(len(a) - i)
        out.extend(a[i:])
    if j < len(b):
        eng.tick(len(b) - j)
        out.extend(b[j:])
    return out


def _build_blocks(eng, d, J, z, split=None):
    """Forward-order block schedule for one frame.

    Case z < k walks: block z first, then down to 0, then up to k. Case
    z == k (split is (P_low, P_high, P_top)): the top side subposet splits
    around a perturbation element, its low part stands in for block z, the
    middle runs blocks k-2 .. 0 .. k-1, and the high part closes at FULL.
    """
    k = d.k
    blocks = []
    if split is None and z == 0:
        blocks.append(Block([], ("scan", 0), _translate(eng, d, J, 0), (FULL, None), LAST_END))
        for j in range(1, k + 1):
            blocks.append(
                Block(
                    [(1, d.c(j))],
                    ("trans", (d.drop[j],), (d.rise[j],)),
                    form(FULL, d.rise[j]),
                    (FULL, None),
                    FIRST_END,
                )
            )
        blocks[-1].rev_init = ("scan_top",)
        return blocks

    if split is None:
        blocks.append(Block([], ("scan", z), _translate(eng, d, J, z), (EMPTY, None), LAST_END))
        asc_end = z + 1
    else:
        p_low, p_high, p_top = split
        blocks.append(Block([], ("init", p_low), _translate_split(eng, d, J, p_low), (EMPTY, None), LAST_END))
        asc_end = z - 1

    # descending pass: z-2, z-4, ... down to 1 (z odd) or 2 (z even)
    i = z - 2
    while i > 0:
        blocks.append(
            Block(
                [(-1, d.c(i + 1)), (-1, d.c(i + 2))],
                ("trans", (d.rise[i + 1], d.rise[i + 2]), (d.drop[i + 1], d.drop[i + 2])),
                form(EMPTY, _merge_form(eng, d.drop[i + 1], d.drop[i + 2])),
                (EMPTY, None),
                LAST_END,
            )
        )
        i -= 2
    if z % 2 == 0:
        # turnaround at block 0, then block 1
        blocks.append(
            Block(
                [(-1, d.c(1)), (-1, d.c(2))],
                ("trans", (d.rise[1], d.rise[2]), (d.drop[1], d.drop[2])),
                form(EMPTY, _merge_form(eng, d.drop[1], d.drop[2])),
                (FULL, None),
                LAST_END,
            )
        )
        blocks.append(
            Block(
                [(1, d.c(1))],
                ("trans", (d.drop[1],), (d.rise[1],)),
                form(FULL, d.rise[1]),
                (FULL, None),
                FIRST_END,
            )
        )
        j = 3
    else:
        blocks.append(
            Block(
                [(-1, d.c(1))],
                ("trans", (d.rise[1],), (d.drop[1],)),
                (EMPTY, None),
                (FULL, None),
                NO_END,
            )
        )
        j = 2
    # ascending pass back up
    while j <= asc_end:
        blocks.append(
            Block(
                [(1, d.c(j - 1)), (1, d.c(j))],
                ("trans", (d.drop[j - 1], d.drop[j]), (d.rise[j - 1], d.rise[j])),
                form(FULL, _merge_form(eng, d.rise[j - 1], d.rise[j])),
                (FULL, None),
                FIRST_END,
            )
        )
        j += 2
    assert j == asc_end + 2

    if split is None:
        for j in range(z + 2, k + 1):
            blocks.append(
                Block(
                    [(1, d.c(j))],
                    ("trans", (d.drop[j],), (d.rise[j],)),
                    form(FULL, d.rise[j]),
                    (FULL, None),
                    FIRST_END,
                )
            )
        blocks[-1].rev_init = ("scan_top",)
    else:
        # middle began from the stored top subposet, not the rolling state
        s = blocks[1].source
        assert s[0] == "trans"
        blocks[1].source = ("init_trans", p_top, s[1], s[2])
        blocks[-1].rev_init = ("init_trans", p_top, (), (d.drop[k],))
        blocks.append(
            Block(
                [(1, d.c(k))],
                ("init", p_high),
                (FULL, None),
                (FULL, None),
                FIRST_END,
            )
        )
    return blocks


def _translate_split(eng, d, J, p_low):
    """Rewrite ideal J (block k) as an ideal of the low split part."""
    ja, ids = J
    assert ids is not None
    out = []
    if ja == EMPTY:
        fh = d.fence_high
        pos = d.chain_pos
        lim = d.k + 1
        for u in ids:
            eng.tick()
            if u not in pos and fh[u] == lim:
                out.append(u)
    else:
        lowset = set()
        for u in p_low:
            eng.tick()
            lowset.add(u)
        for u in ids:
            eng.tick()
            if u in lowset:
                out.append(u)
    return form(ja, out)


def _resolve_forms(b, rolling):
    """Apply the pending-perturbation rule once the subposet is known."""
    f, l = b.first, b.last
    if b.pend == NO_END or not rolling:
        return f, l
    la = l[0]
    fa, fd = f
    if fa == la:
        same = fd is None
    else:
        same = fd is not None and len(fd) == len(rolling)
    if not same:
        return f, l
    if b.pend == LAST_END:
        return (la, None), (la, PERTURB)
    return (la, PERTURB), l


def _eval_init(eng, d, b):
    s = b.source
    if s[0] == "init":
        return s[1]
    if s[0] == "init_trans":
        return advance(eng, s[1], drops=s[2], adds=s[3])
    r = b.rev_init
    assert r is not None
    if r[0] == "scan_top":
        return top_live(eng, d)
    assert r[0] == "init_trans"
    return advance(eng, r[1], drops=r[2], adds=r[3])


def _normalize(cursor, ret, sign):
    if ret is None:
        return
    x, anchor = ret
    if anchor == FULL:
        cursor.sadd(x, sign)
    else:
        cursor.sremove(x, sign)


def _fkey(f):
    a, d = f
    if d is None:
        return (a, 0)
    if d is PERTURB:
        return (a, 1)
    return (a, tuple(d))


def _gray_ideals(eng, p, cursor, sub, sign, first, last, memo=None):
    rec = eng.enter(sub)
    key = t0 = v0 = None
    if memo is not None and rec is not None and rec.depth >= memo.min_depth:
        key = (tuple(sub), sign, _fkey(first), _fkey(last))
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
    entry_sign = sign
    reverse = False
    while True:
        la, ld = last
        fa, fd = first
        if ld is None and la == FULL:
            J = first
            break
        if ld is None and la == EMPTY:
            sign = -sign
            first = (1 - fa, fd)
            last = (FULL, None)
        elif fd is None and fa == FULL:
            J = last
            reverse = True
            break
        elif fd is None and fa == EMPTY:
            sign = -sign
            first = (FULL, None)
            last = (1 - la, ld)
        else:
            raise AssertionError("no exact end: %r %r" % (first, last))

    d = decompose(eng, p, sub, flipped=sign < 0)
    k = d.k
    jret = None
    ja, jd = J
    if jd is PERTURB:
        x = d.chain[k - 1] if ja == FULL else d.chain[0]
        if not reverse:
            if ja == FULL:
                cursor.sremove(x, sign)
            else:
                cursor.sadd(x, sign)
        else:
            jret = (x, ja)
        J = (ja, [x])
    z = _zeta(eng, d, J)

    split = None
    if z == k:
        ja, ids = J
        if ja == FULL:
            y = ids[0]
        else:
            idset = set()
            for u in ids:
                eng.tick()
                idset.add(u)
            y = None
            for u in sub:
                eng.tick()
                if u not in idset:
                    y = u
                    break
            assert y is not None
        p_top = top_live(eng, d)
        p_low, p_high = split_top(eng, d, y, top=p_top)
        split = (p_low, p_high, p_top)

    blocks = _build_blocks(eng, d, J, z, split=split)

    rolling = None
    ret = None
    if not reverse:
        for b in blocks:
            _normalize(cursor, ret, sign)
            for op, el in b.entry:
                if op > 0:
                    cursor.sadd(el, sign)
                else:
                    cursor.sremove(el, sign)
            s = b.source
            if s[0] == "scan":
                rolling = side_ideal(eng, d, s[1])
            elif s[0] == "init":
                rolling = s[1]
            elif s[0] == "init_trans":
                rolling = advance(eng, s[1], drops=s[2], adds=s[3])
            else:
                rolling = advance(eng, rolling, drops=s[1], adds=s[2])
            f, l = _resolve_forms(b, rolling)
            ret = yield _gray_ideals(eng, p, cursor, rolling, sign, f, l, memo)
        assert ret is None
    else:
        m = len(blocks) - 1
        for t in range(m, -1, -1):
            b = blocks[t]
            if t == m:
                rolling = _eval_init(eng, d, b)
            else:
                nxt = blocks[t + 1]
                if nxt.source[0] == "trans":
                    rolling = advance(eng, rolling, drops=nxt.source[2], adds=nxt.source[1])
                else:
                    rolling = _eval_init(eng, d, b)
            f, l = _resolve_forms(b, rolling)
            _normalize(cursor, ret, sign)
            if t < m:
                for op, el in reversed(blocks[t + 1].entry):
                    if op > 0:
                        cursor.sremove(el, sign)
                    else:
                        cursor.sadd(el, sign)
            ret = yield _gray_ideals(eng, p, cursor, rolling, sign, l, f, memo)
        assert ret is None

    eng.leave(rec)
    out = None
    if jret is not None:
        x, anchor = jret
        if sign != entry_sign:
            anchor = 1 - anchor
        out = (x, anchor)
    if key is not None:
        memo.misses += 1
        memo.table[key] = (eng.t - t0, eng.visits - v0, out)
    return out


# ------------------------------------------------------------------ public api

def basic_ideals(p, eng=None):
    """Yield every ideal of p as a frozenset, plain recursive order."""
    if eng is None:
        eng = Engine()
    cursor = BasicCursor(eng, p.n)
    gen = _basic_ideals(eng, p, cursor, list(range(p.n)))
    for _ in drive(eng, gen):
        yield frozenset(cursor.as_set())


def count_ideals(p, eng=None):
    if eng is None:
        eng = Engine()
    cursor = BasicCursor(eng, p.n)
    total = 0
    for _ in drive(eng, _basic_ideals(eng, p, cursor, list(range(p.n)))):
        total += 1
    return total


def gray_ideal_deltas(p, eng=None):
    """Yield (added, removed) id tuples per ideal; at most 3 ids per step.

    The first delta is relative to the empty set, so a walk starts with
    ((), ()) for the empty ideal and ends at the full ground set.
    """
    if eng is None:
        eng = Engine()
    cursor = GrayCursor(eng, p.n)
    gen = _gray_ideals(eng, p, cursor, list(range(p.n)), 1, (EMPTY, None), (FULL, None))
    return drive(eng, gen, cursor)


def gray_ideals(p, eng=None):
    """Yield every ideal of p as a frozenset, gray order."""
    cur = set()
    for added, removed in gray_ideal_deltas(p, eng):
        cur.difference_update(removed)
        cur.update(added)
        yield frozenset(cur)
