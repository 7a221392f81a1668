"""CLI surface: flags, formats, exit codes."""

import flipwalk.cli as cli
from flipwalk.cli import main
from flipwalk.poset import chain, dump_poset


def run(capsys, *argv):
    code = main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_count_values(capsys):
    code, out, _ = run(capsys, "enumerate", "--gen", "chain:3", "--kind", "ideals", "--count")
    assert code == 0 and out == "4\n"
    code, out, _ = run(capsys, "enumerate", "--gen", "antichain:10", "--kind", "ideals", "--count")
    assert code == 0 and out == "1024\n"


def test_set_lines_chain(capsys):
    code, out, _ = run(capsys, "enumerate", "--gen", "chain:3")
    assert code == 0
    assert out == ".\n0\n0 1\n0 1 2\n"


def test_delta_lines_are_small(capsys):
    code, out, _ = run(capsys, "enumerate", "--gen", "uno:2", "--deltas")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "."
    for line in lines[1:]:
        assert 1 <= len(line.split()) <= 3


def test_loopless_stream_matches_plain(capsys):
    code, plain, _ = run(capsys, "enumerate", "--gen", "uno:2")
    code2, loop, _ = run(capsys, "enumerate", "--gen", "uno:2", "--loopless")
    assert code == 0 and code2 == 0
    assert plain == loop


def test_order_basic_antichains(capsys):
    code, out, _ = run(capsys, "enumerate", "--gen", "chain:2", "--kind", "antichains",
                       "--order", "basic")
    assert code == 0
    assert sorted(out.strip().split("\n")) == [".", "0", "1"]


def test_poset_file_input(tmp_path, capsys):
    path = tmp_path / "p.poset"
    with open(path, "w") as fh:
        dump_poset(chain(4), fh)
    code, out, _ = run(capsys, "enumerate", "--in", str(path), "--count")
    assert code == 0 and out == "5\n"


def test_out_file(tmp_path, capsys):
    path = tmp_path / "sets.txt"
    code, out, _ = run(capsys, "enumerate", "--gen", "chain:3", "--out", str(path))
    assert code == 0 and out == ""
    assert path.read_text() == ".\n0\n0 1\n0 1 2\n"


def test_input_errors_exit_2(capsys):
    cases = [
        ("enumerate",),
        ("enumerate", "--gen", "mystery:4"),
        ("enumerate", "--gen", "chain:3", "--in", "nowhere.poset"),
        ("enumerate", "--in", "nowhere.poset"),
        ("enumerate", "--gen", "chain:3", "--loopless", "--order", "basic"),
        ("audit", "--gen", "chain:3", "--mu", "10"),
        ("audit", "--gen", "chain:3", "--pushout", "alpha=1", "beta=4"),
        ("audit", "--gen", "chain:3", "--pushout", "gamma=2", "beta=4"),
        ("bench", "--sizes", "ten,20"),
    ]
    for argv in cases:
        code, _, err = run(capsys, *argv)
        assert code == 2, argv
        assert "error:" in err


def test_audit_clean_run(capsys, tmp_path):
    ledger = tmp_path / "ledger.csv"
    code, out, _ = run(capsys, "audit", "--gen", "uno:2", "--pushout", "alpha=1.5", "beta=4",
                       "--out", str(ledger))
    assert code == 0
    assert "check pyramid: ok" in out
    assert "check gap: ok" in out
    assert "push-out alpha=1.5 beta=4" in out
    header = ledger.read_text().split("\n", 1)[0]
    assert header == "node_id,parent_id,depth,n,q,t,phi,ticks,visits"


def test_audit_big_poset_switches_mode(capsys):
    code, out, err = run(capsys, "audit", "--gen", "uno:16")
    assert code == 0
    assert "replaying repeated shapes" in err
    assert "check pyramid: ok" in out
    assert "check gap" not in out


def test_audit_violation_exits_3(capsys, monkeypatch):
    monkeypatch.setattr(cli, "full_report", lambda led: {"pyramid": [(0, "weak", 1, 2)]})
    code, out, _ = run(capsys, "audit", "--gen", "chain:3")
    assert code == 3
    assert "check pyramid: FAIL" in out


def test_bench_csv(tmp_path, capsys):
    path = tmp_path / "bench.csv"
    code, _, _ = run(capsys, "bench", "--sizes", "12,24", "--limit", "400",
                     "--out", str(path))
    assert code == 0
    lines = path.read_text().strip().split("\n")
    assert lines[0].startswith("family,n,q,outputs")
    assert len(lines) == 7
