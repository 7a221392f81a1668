"""Throughput and delay measurements over scaling poset families.

Each row is one truncated enumeration: total ticks, ticks per output, the
worst tick gap between consecutive outputs, and the ticks spent before the
first output. ticks_per_output is the steady rate after the first output,
(total - first) / (outputs - 1); truncated runs on big posets would
otherwise be dominated by the opening descent, which ticks_to_first already
reports on its own. Plain rows read the gaps off the raw gray walk; loopless
rows route the same walk through the stepper and read its release times
instead.
The sweep runs chain, antichain, and sparse random families at a ladder of
sizes, keeping the random family's cover density proportional to 1/n so the
shapes stay comparable across sizes.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from itertools import islice

from .antichains import gray_antichain_deltas
from .engine import Engine
from .ideals import gray_ideal_deltas
from .poset import antichain, chain, compute_stats, random_poset
from .stepper import LooplessStepper


@dataclass
class BenchRow:
    family: str
    n: int
    q: int
    outputs: int
    total_ticks: int
    ticks_per_output: float
    max_gap_ticks: int
    ticks_to_first: int


def bench_run(p, family, kind="ideals", loopless=False, limit=10_000):
    """Run one truncated enumeration and fold it into a BenchRow."""
    q = compute_stats(p).q
    if loopless:
        st = LooplessStepper(p, kind)
        outputs = sum(1 for _ in islice(st, limit))
        first, worst = st.gap_stats()
        total = st.eng.t
    else:
        eng = Engine()
        deltas = gray_ideal_deltas(p, eng) if kind == "ideals" else gray_antichain_deltas(p, eng)
        outputs = 0
        first = 0
        worst = 0
        prev = None
        for _ in islice(deltas, limit):
            outputs += 1
            now = eng.t
            if prev is None:
                first = now
            elif now - prev > worst:
                worst = now - prev
            prev = now
        total = eng.t
    if outputs > 1:
        per = (total - first) / (outputs - 1)
    else:
        per = float(total)
    return BenchRow(family, p.n, q, outputs, total, round(per, 3), worst, first)


def bench_sweep(kind="ideals", loopless=False, sizes=(50, 100, 200, 400),
                limit=10_000, seed=1):
    rows = []
    for n in sizes:
        rows.append(bench_run(chain(n), "chain", kind, loopless, limit))
        rows.append(bench_run(antichain(n), "antichain", kind, loopless, limit))
        p = random_poset(n, 4.0 / n, seed=seed)
        rows.append(bench_run(p, "random", kind, loopless, limit))
    return rows


def write_bench_csv(rows, path):
    with open(path, "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["family", "n", "q", "outputs", "total_ticks",
                    "ticks_per_output", "max_gap_ticks", "ticks_to_first"])
        for r in rows:
            w.writerow([r.family, r.n, r.q, r.outputs, r.total_ticks,
                        r.ticks_per_output, r.max_gap_ticks, r.ticks_to_first])
