"""Bench row semantics and CSV output."""

from flipwalk.bench import bench_run, bench_sweep, write_bench_csv
from flipwalk.poset import antichain, chain


def test_chain_row_values():
    r = bench_run(chain(10), "chain")
    assert r.n == 10 and r.q == 0
    assert r.outputs == 11
    assert r.ticks_to_first > 0
    assert 1.5 < r.ticks_per_output < 3.0


def test_truncation_caps_outputs():
    r = bench_run(antichain(14), "anti", limit=500)
    assert r.outputs == 500
    assert r.total_ticks > r.ticks_to_first


def test_sweep_is_flat_per_family():
    rows = bench_sweep(sizes=(20, 40), limit=2000)
    assert len(rows) == 6
    fams = {}
    for r in rows:
        fams.setdefault(r.family, []).append(r)
    assert set(fams) == {"chain", "antichain", "random"}
    for fam, rs in fams.items():
        rates = [r.ticks_per_output for r in rs]
        assert max(rates) < 2 * min(rates), (fam, rates)
        for r in rs:
            assert r.ticks_to_first <= r.n * (r.n + r.q)


def test_loopless_rows_match_plain_counts():
    plain = bench_sweep(sizes=(20,), limit=1500)
    loop = bench_sweep(sizes=(20,), limit=1500, loopless=True)
    for a, b in zip(plain, loop):
        assert a.family == b.family and a.outputs == b.outputs
        assert b.max_gap_ticks <= 392 * 8  # far inside even the smaller slot size


def test_csv_format(tmp_path):
    rows = bench_sweep(sizes=(15,), limit=300)
    path = tmp_path / "bench.csv"
    write_bench_csv(rows, path)
    raw = path.read_bytes()
    assert b"\r" not in raw
    lines = raw.decode().strip().split("\n")
    assert lines[0] == "family,n,q,outputs,total_ticks,ticks_per_output,max_gap_ticks,ticks_to_first"
    assert len(lines) == 4
