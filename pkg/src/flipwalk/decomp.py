"""Greedy chain decomposition of a subposet, plus the bucket transitions.

decompose() levels the elements of a subposet by scanning existing levels top
down; the first predecessor hit decides the level, and following predecessor
links from the top level's first element yields a maximal chain c_1 < ... <
c_k. Every failed probe is a certified incomparable pair, which is what keeps
the total probe count linear in (elements + incomparable pairs).

Each off-chain element u then gets two chain fences: fence_low(u) is the
highest chain index strictly below u, fence_high(u) the lowest strictly
above (k+1 if none). The side subposet at chain position i is the set of
off-chain elements whose fences straddle i, and neighbouring side subposets
differ only by a couple of fence buckets, which advance() applies as a
filter plus sorted merge.

All subposet lists are kept in ascending id order; a flipped frame reads the
same lists against the reversed relation instead of reordering anything.
"""

from __future__ import annotations


class Decomp:
    __slots__ = (
        "p",
        "flipped",
        "sub",
        "k",
        "chain",
        "chain_pos",
        "off",
        "fence_low",
        "fence_high",
        "rise",
        "drop",
    )

    def c(self, i):
        """Chain element at 1-based position i."""
        return self.chain[i - 1]


def decompose(eng, p, sub, flipped=False):
    """Decompose the subposet induced on sub (ascending id list).

    flipped swaps the order relation, which is how frames that enumerate
    complements see the poset; the element lists stay in ascending id order
    regardless.
    """
    d = Decomp()
    d.p = p
    d.flipped = flipped
    d.sub = sub
    below = p.up if flipped else p.down

    levels = []
    masks = []
    pred = {}
    level_of = {}
    order = reversed(sub) if flipped else sub
    for u in order:
        du = below[u]
        placed = 0
        for t in range(len(levels) - 1, -1, -1):
            hit = du & masks[t]
            if hit:
                for idx, v in enumerate(levels[t]):
                    if (hit >> v) & 1:
                        eng.tick(idx + 1)
                        pred[u] = v
                        break
                placed = t + 1
                break
            eng.tick(len(levels[t]))
        if placed == len(levels):
            levels.append([])
            masks.append(0)
        if not placed:
            pred[u] = None
        eng.tick()
        levels[placed].append(u)
        masks[placed] |= 1 << u
        level_of[u] = placed + 1

    k = len(levels)
    d.k = k
    ch = []
    v = levels[-1][0] if levels else None
    while v is not None:
        eng.tick()
        ch.append(v)
        v = pred[v]
    ch.reverse()
    assert len(ch) == k
    d.chain = ch
    d.chain_pos = {u: i + 1 for i, u in enumerate(ch)}

    d.off = [u for u in sub if u not in d.chain_pos]
    fl = {}
    fh = {}
    for u in d.off:
        j = level_of[u]
        lo = 0
        for i in range(j - 1, 0, -1):
            eng.tick()
            if _less(p, flipped, ch[i - 1], u):
                lo = i
                break
        hi = k + 1
        for i in range(j + 1, k + 1):
            eng.tick()
            if _less(p, flipped, u, ch[i - 1]):
                hi = i
                break
        fl[u] = lo
        fh[u] = hi
    d.fence_low = fl
    d.fence_high = fh

    rise = [[] for _ in range(k + 1)]
    drop = [[] for _ in range(k + 2)]
    for u in d.off:
        eng.tick(2)
        rise[fl[u]].append(u)
        drop[fh[u]].append(u)
    d.rise = rise
    d.drop = drop
    return d


def _less(p, flipped, u, v):
    if flipped:
        u, v = v, u
    return (p.up[u] >> v) & 1


def side_ideal(eng, d, i):
    """Off-chain elements straddling position i for the ideal recursion."""
    fl = d.fence_low
    fh = d.fence_high
    out = []
    for u in d.off:
        eng.tick()
        if fl[u] <= i <= fh[u] - 1:
            out.append(u)
    return out


def side_anti(eng, d, i):
    """Off-chain elements incomparable to c_i, for the antichain recursion."""
    fl = d.fence_low
    fh = d.fence_high
    out = []
    for u in d.off:
        eng.tick()
        if fl[u] < i < fh[u]:
            out.append(u)
    return out


def top_live(eng, d):
    """Off-chain elements with no chain element above them."""
    fh = d.fence_high
    lim = d.k + 1
    out = []
    for u in d.off:
        eng.tick()
        if fh[u] == lim:
            out.append(u)
    return out


def split_top(eng, d, y, top=None):
    """Split the top side subposet around element y.

    Returns (low, high): members of the top side subposet other than y not
    above y, and those not below-or-equal y. Ideals of the top side subposet
    avoiding y live in low; those containing y contain y's downset and
    project to high. Pass top to reuse an already computed top subposet.
    """
    if top is None:
        top = top_live(eng, d)
    p = d.p
    flipped = d.flipped
    low = []
    high = []
    for u in top:
        eng.tick(2)
        if u != y and not _less(p, flipped, y, u):
            low.append(u)
        if u != y and not _less(p, flipped, u, y):
            high.append(u)
    return low, high


def advance(eng, rolling, drops=(), adds=()):
    """Next side subposet: filter out drop buckets, merge in add buckets.

    All lists ascend by id; the result does too. Returns the input list
    object unchanged when there is nothing to do.
    """
    dropset = set()
    for dl in drops:
        for u in dl:
            eng.tick()
            dropset.add(u)
    out = rolling
    if dropset:
        out = []
        for u in rolling:
            eng.tick()
            if u not in dropset:
                out.append(u)
    for al in adds:
        if al:
            out = _merge(eng, out, al)
    return out


def _merge(eng, a, b):
    out = []
    i = j = 0
    na = len(a)
    nb = len(b)
    while i < na and j < nb:
        eng.tick()
        if a[i] < b[j]:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    if i < na:
        eng.tick(na - i)
        out.extend(a[i:])
    if j < nb:
        eng.tick(nb - j)
        out.extend(b[j:])
    return out
