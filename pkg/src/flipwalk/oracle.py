"""Brute-force reference enumeration and stream checkers for the tests.

Everything here iterates over all 2^n subsets, so it refuses anything past
n = 22. The fast enumerators are validated against these on a corpus of
small posets; the checkers also replay delta streams and verify the gray
property independently of how a stream was produced.
"""


def _check_size(p):
    if p.n > 22:
        raise ValueError("oracle is exponential, refusing n=%d > 22" % p.n)


def brute_ideals(p):
    """All downsets as frozensets of internal ids."""
    _check_size(p)
    out = []
    for mask in range(1 << p.n):
        ok = True
        m = mask
        while m:
            low = m & -m
            u = low.bit_length() - 1
            m ^= low
            if p.down[u] & ~mask:
                ok = False
                break
        if ok:
            out.append(frozenset(i for i in range(p.n) if (mask >> i) & 1))
    return out


def brute_antichains(p):
    """All antichains as frozensets of internal ids."""
    _check_size(p)
    out = []
    for mask in range(1 << p.n):
        ok = True
        m = mask
        while m:
            low = m & -m
            u = low.bit_length() - 1
            m ^= low
            if p.up[u] & mask:
                ok = False
                break
        if ok:
            out.append(frozenset(i for i in range(p.n) if (mask >> i) & 1))
    return out


def canon(family):
    """Canonical order for set families so collections compare positionally."""
    return sorted((frozenset(s) for s in family), key=lambda s: (len(s), tuple(sorted(s))))


def verify_gray(sets, k=3):
    """Check consecutive symmetric differences are all <= k.

    Returns (True, None) or (False, first_bad_index) where the bad index is
    of the second set of the offending pair.
    """
    prev = None
    for i, s in enumerate(sets):
        s = frozenset(s)
        if prev is not None and len(prev ^ s) > k:
            return False, i
        prev = s
    return True, None


def verify_permutation(stream, family):
    """Check a stream visits exactly the given family, each set once."""
    seen = []
    for s in stream:
        seen.append(frozenset(s))
    if len(seen) != len(set(seen)):
        return False
    return canon(seen) == canon(family)


def replay(start, deltas):
    """Apply (added, removed) events to a starting set, yielding each state.

    The starting state itself is not yielded; feed the first visit through
    deltas too. Raises if an event re-adds a present element or removes a
    missing one, which is how round-trip tests catch cursor bugs.
    """
    cur = set(start)
    for added, removed in deltas:
        for u in added:
            if u in cur:
                raise ValueError("delta adds present element %r" % (u,))
            cur.add(u)
        for u in removed:
            if u not in cur:
                raise ValueError("delta removes absent element %r" % (u,))
            cur.remove(u)
        yield frozenset(cur)
