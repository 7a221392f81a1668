"""Worst-case delay smoothing over the amortized gray walks.

The gray walkers are constant amortized: bursts between outputs can reach the
deepest root-to-leaf descent cost d, but j outputs are always done within
j * mu * tstar + d ticks. That shape deamortizes with a FIFO of buffered
deltas: run the producer d ticks ahead, then release one delta per mu * tstar
producer ticks. The visit-gap bound keeps the buffer nonempty at every
release and its occupancy under 2d / (mu * tstar).

d is measured, not derived: a dry probe walks the same poset with a stateless
cursor and path metering and reports the deepest descent it saw. Probes
truncated by tick budget double the observed value for margin; the live run
keeps its own path meter and trips if the bound is ever exceeded, so a wrong
guess fails loudly instead of silently stretching delays.
"""

from __future__ import annotations

from collections import deque

from .antichains import _gray_antis, gray_antichain_deltas
from .audit import constants_for
from .engine import Engine, NullCursor, drive
from .ideals import EMPTY, FULL, _gray_ideals, gray_ideal_deltas


def probe_delta(p, kind="ideals", exact=False, budget=200_000):
    """Dry-run the gray walk and measure the deepest descent in own ticks.

    Returns (bound, complete). Exact probes run the whole walk and return
    the true maximum. Budgeted probes stop after roughly budget ticks and
    return twice what they saw, which covers the tail for the families this
    is used on; the stepper's tripwire catches the ones it does not.
    """
    eng = Engine(measure_path=True)
    cursor = NullCursor(eng)
    sub = list(range(p.n))
    if kind == "ideals":
        gen = _gray_ideals(eng, p, cursor, sub, 1, (EMPTY, None), (FULL, None))
    else:
        gen = _gray_antis(eng, p, cursor, sub, False)
    complete = True
    for _ in drive(eng, gen):
        if not exact and eng.t >= budget:
            complete = False
            break
    bound = eng.maxpath if complete else 2 * eng.maxpath
    return max(bound, 1), complete


class LooplessStepper:
    """Buffered replay of a gray delta stream with even release times.

    Iterate it to get exactly the walker's (added, removed) stream. After
    the warm-up of delta_bound producer ticks, one delta is released every
    mu * tstar producer ticks, or as soon as the buffer fills (a full buffer
    pauses the producer, and with the walks running far under their worst
    case it fills long before the clock slot ends). An empty buffer at
    release time counts as a starvation; the certified walks never starve.
    emit_times holds the producer clock at each release.
    """

    def __init__(self, p, kind="ideals", c=None, delta_bound=None, exact_probe=False):
        self.p = p
        self.kind = kind
        self.c = constants_for(kind) if c is None else c
        if delta_bound is None:
            delta_bound, _ = probe_delta(p, kind, exact=exact_probe)
        self.delta_bound = delta_bound
        step = self.c.mu * self.c.tstar
        self.step = step
        self.capacity = max(1, -(-2 * delta_bound // step))
        self.eng = Engine(measure_path=True)
        if kind == "ideals":
            self._producer = gray_ideal_deltas(p, self.eng)
        else:
            self._producer = gray_antichain_deltas(p, self.eng)
        self.starved = 0
        self.peak = 0
        self.emit_times = []

    def _pull(self, q, it):
        try:
            q.append(next(it))
        except StopIteration:
            return True
        if self.eng.maxpath > self.delta_bound:
            raise RuntimeError(
                "delta bound violated: descent %d exceeds budget %d"
                % (self.eng.maxpath, self.delta_bound)
            )
        return False

    def __iter__(self):
        eng = self.eng
        q = deque()
        it = iter(self._producer)
        target = self.delta_bound
        done = False
        while True:
            while not done and eng.t < target and len(q) < self.capacity:
                done = self._pull(q, it)
            if not done and not q:
                # release time reached with nothing buffered
                self.starved += 1
                done = self._pull(q, it)
            if not q:
                break
            if len(q) > self.peak:
                self.peak = len(q)
            self.emit_times.append(eng.t)
            target += self.step
            yield q.popleft()

    def gap_stats(self):
        """(ticks to first release, max gap between later releases)."""
        times = self.emit_times
        if not times:
            return 0, 0
        worst = 0
        for i in range(1, len(times)):
            d = times[i] - times[i - 1]
            if d > worst:
                worst = d
        return times[0], worst
