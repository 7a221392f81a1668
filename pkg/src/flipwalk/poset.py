"""Finite posets stored as bitmask relation rows, with loaders and generators.

Internally elements are ids 0..n-1 in topological order: u < v numerically
whenever u lies strictly below v. The relation is kept as one big int per
element (bit v of up[u] set iff u below v), which makes comparisons and the
counting kernels cheap without any third-party dependency. Original labels
survive relabeling so files round-trip.
"""

from __future__ import annotations

import random
from dataclasses import dataclass


class Poset:
    __slots__ = ("n", "labels", "up", "down")

    def __init__(self, n, up, labels=None):
        self.n = n
        self.up = up
        down = [0] * n
        for u in range(n):
            m = up[u]
            # ids must be topological
            assert m & ((1 << (u + 1)) - 1) == 0, "relation not in id order"
            while m:
                low = m & -m
                down[low.bit_length() - 1] |= 1 << u
                m ^= low
        self.down = down
        self.labels = list(labels) if labels is not None else list(range(n))

    def less(self, u, v):
        return (self.up[u] >> v) & 1

    def incomparable(self, u, v):
        return u != v and not (self.up[u] >> v) & 1 and not (self.up[v] >> u) & 1

    def __repr__(self):
        edges = sum(m.bit_count() for m in self.up)
        return "Poset(n=%d, relations=%d)" % (self.n, edges)


def _close(n, up):
    """Transitive closure in place (Warshall over bitmask rows)."""
    for w in range(n):
        bw = 1 << w
        uw = up[w]
        if not uw:
            continue
        for u in range(n):
            if up[u] & bw:
                up[u] |= uw
    for u in range(n):
        if (up[u] >> u) & 1:
            raise ValueError("not a partial order (cycle through %d)" % u)


def topological_relabel(n, up, labels=None):
    """Build a Poset from a closed relation in arbitrary id order.

    Picks the linear extension that is stable by label among incomparable
    elements, so the result is deterministic: at every step the minimal
    element with the smallest label gets the next id.
    """
    if labels is None:
        labels = list(range(n))
    down = [0] * n
    for u in range(n):
        m = up[u]
        while m:
            low = m & -m
            down[low.bit_length() - 1] |= 1 << u
            m ^= low
    remaining = (1 << n) - 1
    order = []
    while remaining:
        best = -1
        m = remaining
        while m:
            low = m & -m
            u = low.bit_length() - 1
            m ^= low
            if down[u] & remaining == 0 and (best < 0 or labels[u] < labels[best]):
                best = u
        assert best >= 0
        order.append(best)
        remaining &= ~(1 << best)
    newid = [0] * n
    for i, u in enumerate(order):
        newid[u] = i
    up2 = [0] * n
    for u in range(n):
        m = up[u]
        acc = 0
        while m:
            low = m & -m
            acc |= 1 << newid[low.bit_length() - 1]
            m ^= low
        up2[newid[u]] = acc
    return Poset(n, up2, labels=[labels[u] for u in order])


def from_relations(n, pairs, labels=None):
    """Poset from (u, v) pairs meaning u strictly below v; closure is taken."""
    up = [0] * n
    for u, v in pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError("relation %r out of range" % ((u, v),))
        if u == v:
            raise ValueError("not a partial order (reflexive pair %d)" % u)
        up[u] |= 1 << v
    _close(n, up)
    return topological_relabel(n, up, labels)


# ---------------------------------------------------------------- file format

def load_poset(src):
    """Read the poset file format.

    Line oriented: a `poset <n>` header, then `rel <u> <v>` lines (u below v,
    0-based), `#` comments and blank lines ignored.
    """
    if isinstance(src, str):
        with open(src) as fh:
            return load_poset(fh)
    n = None
    pairs = []
    for lineno, raw in enumerate(src, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "poset" and len(parts) == 2:
            if n is not None:
                raise ValueError("line %d: duplicate header" % lineno)
            n = int(parts[1])
            if n < 0:
                raise ValueError("line %d: negative size" % lineno)
        elif parts[0] == "rel" and len(parts) == 3:
            if n is None:
                raise ValueError("line %d: rel before header" % lineno)
            pairs.append((int(parts[1]), int(parts[2])))
        else:
            raise ValueError("line %d: cannot parse %r" % (lineno, raw.strip()))
    if n is None:
        raise ValueError("missing `poset <n>` header")
    return from_relations(n, pairs)


def dump_poset(p, dst):
    """Write the poset file format, emitting only covering relations."""
    if isinstance(dst, str):
        with open(dst, "w") as fh:
            dump_poset(p, fh)
            return
    lines = []
    for u in range(p.n):
        m = p.up[u]
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            if p.up[u] & p.down[v] == 0:  # nothing strictly between
                lines.append((p.labels[u], p.labels[v]))
    dst.write("poset %d\n" % p.n)
    for a, b in sorted(lines):
        dst.write("rel %d %d\n" % (a, b))


# ----------------------------------------------------------------- generators

def chain(n):
    return from_relations(n, [(i, i + 1) for i in range(n - 1)])


def antichain(n):
    return from_relations(n, [])


def random_poset(n, density=0.1, seed=0):
    rng = random.Random(seed)
    pairs = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < density:
                pairs.append((u, v))
    return from_relations(n, pairs)


def layered_hard_poset(ell):
    """Layered family where one child of the root swallows nearly all work.

    2*ell stacked antichain levels whose sizes grow toward the middle, with
    a distinguished chain c_1 < ... < c_2ell through them. Off-chain elements
    of a level sit above the whole previous level (below the whole next one in
    the upper half), so the middle side-poset of the root is everything off
    the chain. Ideal/antichain counts explode while the chain stays short,
    which is exactly the regime where per-node time ratios degrade.
    """
    assert ell >= 1
    sizes = {}
    for j in range(1, ell + 1):
        i = ell + 1 - j
        sizes[j] = 1 + (ell + i - 1) // i
    for j in range(ell + 1, 2 * ell + 1):
        i = j - ell
        sizes[j] = 1 + (ell + i - 1) // i
    level = {}
    nid = 0
    for j in range(1, 2 * ell + 1):
        level[j] = list(range(nid, nid + sizes[j]))
        nid += sizes[j]
    n = nid
    c = {j: level[j][0] for j in level}
    pairs = []
    for j in range(1, 2 * ell):
        pairs.append((c[j], c[j + 1]))
    for j in range(2, ell + 1):
        for a in level[j][1:]:
            for b in level[j - 1]:
                pairs.append((b, a))
    for a in level[ell]:
        pairs.append((a, c[ell + 1]))
    for a in level[ell + 1]:
        pairs.append((c[ell], a))
    for j in range(ell + 1, 2 * ell):
        for a in level[j][1:]:
            for b in level[j + 1]:
                pairs.append((a, b))
    up = [0] * n
    for u, v in pairs:
        up[u] |= 1 << v
    _close(n, up)
    return Poset(n, up)


GENERATORS = {
    "chain": chain,
    "antichain": antichain,
    "random": random_poset,
    "uno": layered_hard_poset,
}


def generate(spec):
    """Parse a generator spec like `chain:8` or `random:30,0.2,7`."""
    kind, _, rest = spec.partition(":")
    if kind not in GENERATORS:
        raise ValueError("unknown generator %r (have %s)" % (kind, ", ".join(sorted(GENERATORS))))
    args = []
    if rest:
        for tok in rest.split(","):
            args.append(float(tok) if "." in tok else int(tok))
    return GENERATORS[kind](*args)


# ---------------------------------------------------------------------- stats

@dataclass(frozen=True)
class PosetStats:
    n: int
    q: int  # incomparable pairs
    t: int  # 3-element antichains


def compute_stats(p, ids=None):
    """Exact (n, q, t) of the full poset or the induced subposet on ids.

    Counting is quadratic in the subset size with bitmask inner loops, cubic
    work only implicitly through popcounts. Fine for audit-scale posets.
    """
    if ids is None:
        ids = range(p.n)
    ids = list(ids)
    mask = 0
    for u in ids:
        mask |= 1 << u
    inc = {}
    for u in ids:
        inc[u] = mask & ~(p.up[u] | p.down[u]) & ~(1 << u)
    q = 0
    t = 0
    for u in ids:
        above = inc[u] >> (u + 1) << (u + 1)
        q += above.bit_count()
        m = above
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            t += (inc[u] & inc[v] >> (v + 1) << (v + 1)).bit_count()
    return PosetStats(len(ids), q, t)
