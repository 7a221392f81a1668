"""Execution core shared by all enumeration walks.

Walkers are generators that yield either the VISIT sentinel (one output) or a
child generator (a recursive call). A small trampoline drives the whole stack
iteratively, so recursion depth is bounded by a Python list instead of the
interpreter stack, and child return values travel through StopIteration.

The engine also owns the cost model. Every element-level operation costs one
tick: a comparison probe, a list insertion/removal/scan step, a cursor flag
flip, a visit. Control flow over chain positions and plain bookkeeping is
free; that keeps the accounting aligned with what a pointer machine would pay
per element touched, and it is the accounting the audit checks node by node.
"""

from __future__ import annotations

VISIT = object()


class NodeRec:
    """Per-frame cost attribution for recorded runs."""

    __slots__ = (
        "nid",
        "parent",
        "depth",
        "sub",
        "enter_t",
        "exit_t",
        "children_span",
        "enter_visits",
        "sub_visits",
    )

    def __init__(self, nid, parent, depth, sub, enter_t, enter_visits):
        self.nid = nid
        self.parent = parent
        self.depth = depth
        self.sub = sub
        self.enter_t = enter_t
        self.exit_t = -1
        self.children_span = 0
        self.enter_visits = enter_visits
        self.sub_visits = 0

    @property
    def span(self):
        return self.exit_t - self.enter_t

    @property
    def own(self):
        return self.span - self.children_span


class Engine:
    """Tick counter, optional frame recorder, optional path-cost meter.

    path tracks the sum of own-ticks of all frames currently open; its
    running maximum is the deepest root-to-leaf cost, which calibrates the
    worst-case stepper. Recording keeps every finished NodeRec for audits.
    """

    def __init__(self, record=False, measure_path=False, record_depth=None):
        self.t = 0
        self.visits = 0
        self.record = record
        self.record_depth = record_depth
        self.measure_path = measure_path
        self._track = record or measure_path
        self.recs = []
        self._rstack = []
        self.visit_times = [] if record else None
        self.path = 0
        self.maxpath = 0
        self._next_nid = 0
        self._intern = {}

    def tick(self, w=1):
        self.t += w
        if self.measure_path:
            self.path += w
            if self.path > self.maxpath:
                self.maxpath = self.path

    def visit(self):
        self.t += 1
        self.visits += 1
        if self.measure_path:
            self.path += 1
            if self.path > self.maxpath:
                self.maxpath = self.path
        if self.record:
            self.visit_times.append(self.t)

    def enter(self, sub):
        if not self._track:
            return None
        nid = self._next_nid
        self._next_nid += 1
        parent = self._rstack[-1].nid if self._rstack else -1
        if self.record:
            s = tuple(sub)
            s = self._intern.setdefault(s, s)
        else:
            s = None
        rec = NodeRec(nid, parent, len(self._rstack), s, self.t, self.visits)
        self._rstack.append(rec)
        return rec

    def leave(self, rec):
        if rec is None:
            return
        top = self._rstack.pop()
        assert top is rec
        rec.exit_t = self.t
        rec.sub_visits = self.visits - rec.enter_visits
        if self._rstack:
            self._rstack[-1].children_span += rec.span
        if self.measure_path:
            self.path -= rec.own
        if self.record and (self.record_depth is None or rec.depth <= self.record_depth):
            self.recs.append(rec)


def drive(eng, root_gen, cursor=None):
    """Run a walker stack to completion, yielding one item per visit.

    With a gray cursor the item is the flushed (added, removed) delta of
    original-id tuples; without, it is None and the caller reads state off
    its own cursor.
    """
    stack = [root_gen]
    send = None
    while stack:
        try:
            ev = stack[-1].send(send)
        except StopIteration as e:
            stack.pop()
            send = e.value
            continue
        send = None
        if ev is VISIT:
            eng.visit()
            if cursor is None:
                yield None
            else:
                yield cursor.flush()
        else:
            stack.append(ev)


class GrayCursor:
    """Current-set tracker that nets out adds/removes between visits.

    Walk code records intent with add/remove (sign-aware for frames that
    enumerate complements); flush applies the net change to the flag array
    and reports it, asserting the gray bound of three changed elements.
    """

    def __init__(self, eng, n):
        self.eng = eng
        self.flags = bytearray(n)
        self.pending = {}

    def add(self, u):
        self.eng.tick()
        s = self.pending.get(u, 0) + 1
        if s:
            self.pending[u] = s
        else:
            del self.pending[u]

    def remove(self, u):
        self.eng.tick()
        s = self.pending.get(u, 0) - 1
        if s:
            self.pending[u] = s
        else:
            del self.pending[u]

    def sadd(self, u, sign):
        if sign > 0:
            self.add(u)
        else:
            self.remove(u)

    def sremove(self, u, sign):
        if sign > 0:
            self.remove(u)
        else:
            self.add(u)

    def flush(self):
        added = []
        removed = []
        for u, s in self.pending.items():
            if s == 1:
                assert not self.flags[u], "re-adding present element %d" % u
                self.flags[u] = 1
                added.append(u)
            elif s == -1:
                assert self.flags[u], "removing absent element %d" % u
                self.flags[u] = 0
                removed.append(u)
            else:
                raise AssertionError("net delta %d on element %d" % (s, u))
        self.pending.clear()
        assert len(added) + len(removed) <= 3, "gray bound exceeded"
        return tuple(added), tuple(removed)

    def as_set(self):
        assert not self.pending
        return {u for u, f in enumerate(self.flags) if f}


class Memo:
    """Exact (ticks, visits, return) table for repeated walker frames.

    A frame's whole subtree cost is a function of its call arguments alone;
    nothing downstream ever reads cursor state. So once a frame shape has run,
    later occurrences charge the stored cost to the engine and skip the
    subtree. min_depth keeps the top of the tree fully executed, so nodes
    recorded above the cutoff still have their complete child rows.

    Only sound on a recording engine with path metering off and a stateless
    cursor (NullCursor): hits skip the subtree's cursor traffic, its frame
    rows, and its visit-time samples, but totals and spans stay exact.
    """

    __slots__ = ("table", "min_depth", "hits", "misses")

    def __init__(self, min_depth=0):
        self.table = {}
        self.min_depth = min_depth
        self.hits = 0
        self.misses = 0

    def replay(self, eng, hit):
        assert not eng.measure_path, "memo replay breaks path metering"
        eng.t += hit[0]
        eng.visits += hit[1]
        self.hits += 1
        return hit[2]


class NullCursor:
    """Cursor that pays the ticks but keeps no state, for audit-only runs."""

    def __init__(self, eng):
        self.eng = eng
        self._depth = 0

    def add(self, u):
        self.eng.tick()

    def remove(self, u):
        self.eng.tick()

    def sadd(self, u, sign):
        self.eng.tick()

    def sremove(self, u, sign):
        self.eng.tick()

    def flush(self):
        return (), ()

    def push(self, u):
        self.eng.tick()
        self._depth += 1

    def mark(self):
        return self._depth

    def rollback(self, m):
        while self._depth > m:
            self.eng.tick()
            self._depth -= 1


class BasicCursor:
    """Current-set tracker with a rollback trail for plain DFS walks."""

    def __init__(self, eng, n):
        self.eng = eng
        self.flags = bytearray(n)
        self.trail = []

    def push(self, u):
        self.eng.tick()
        assert not self.flags[u]
        self.flags[u] = 1
        self.trail.append(u)

    def mark(self):
        return len(self.trail)

    def rollback(self, m):
        trail = self.trail
        while len(trail) > m:
            self.eng.tick()
            self.flags[trail.pop()] = 0

    def as_set(self):
        return set(self.trail)
