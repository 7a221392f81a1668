"""flipwalk: constant-delay enumeration of poset ideals and antichains.

The enumerators walk a recursion tree built from a chain decomposition and
emit each set as a small symmetric difference from its predecessor (at most
three elements in gray order). A tick-level instrumentation layer audits the
amortization argument node by node, and a queue-based stepper flattens the
amortized stream into worst-case constant-delay output.
"""

from .antichains import (
    basic_antichains,
    count_antichains,
    gray_antichain_deltas,
    gray_antichains,
)
from .audit import (
    ANTICHAIN_CONSTANTS,
    IDEAL_CONSTANTS,
    PotentialConstants,
    audit_big,
    audit_run,
    check_pushout,
    check_pyramid,
    full_report,
    potential,
)
from .bench import bench_run, bench_sweep
from .engine import Engine
from .ideals import basic_ideals, count_ideals, gray_ideal_deltas, gray_ideals
from .poset import (
    Poset,
    PosetStats,
    antichain,
    chain,
    compute_stats,
    dump_poset,
    from_relations,
    generate,
    layered_hard_poset,
    load_poset,
    random_poset,
)
from .stepper import LooplessStepper, probe_delta

__all__ = [
    "ANTICHAIN_CONSTANTS",
    "Engine",
    "IDEAL_CONSTANTS",
    "LooplessStepper",
    "Poset",
    "PosetStats",
    "PotentialConstants",
    "antichain",
    "audit_big",
    "audit_run",
    "bench_run",
    "bench_sweep",
    "basic_antichains",
    "basic_ideals",
    "chain",
    "check_pushout",
    "check_pyramid",
    "compute_stats",
    "count_antichains",
    "count_ideals",
    "dump_poset",
    "from_relations",
    "full_report",
    "generate",
    "gray_antichain_deltas",
    "gray_antichains",
    "gray_ideal_deltas",
    "gray_ideals",
    "layered_hard_poset",
    "load_poset",
    "potential",
    "probe_delta",
    "random_poset",
]

__version__ = "0.1.0"
