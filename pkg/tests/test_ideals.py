import random

from flipwalk.engine import Engine
from flipwalk.ideals import basic_ideals, count_ideals, gray_ideal_deltas, gray_ideals
from flipwalk.oracle import brute_ideals, canon, replay, verify_gray
from flipwalk.poset import (
    antichain,
    chain,
    from_relations,
    layered_hard_poset,
    random_poset,
)


def v_poset():
    # 0 < 2, 1 < 2
    return from_relations(3, [(0, 2), (1, 2)])


def test_v_poset_gray_trace():
    got = [sorted(s) for s in gray_ideals(v_poset())]
    assert got == [[], [1], [0], [0, 1], [0, 1, 2]]


def test_chain_gray_is_prefix_ladder():
    p = chain(5)
    got = [sorted(s) for s in gray_ideals(p)]
    assert got == [list(range(i)) for i in range(6)]


def test_antichain_gray_is_subset_code():
    p = antichain(10)
    seen = set()
    prev = None
    for s in gray_ideals(p):
        assert s not in seen
        seen.add(s)
        if prev is not None:
            assert len(s ^ prev) <= 3
        prev = s
    assert len(seen) == 1024
    assert prev == frozenset(range(10))


def test_basic_matches_brute():
    rng = random.Random(101)
    for _ in range(60):
        n = rng.randint(1, 9)
        p = random_poset(n, density=rng.choice([0.1, 0.3, 0.6]), seed=rng.randrange(10**9))
        got = list(basic_ideals(p))
        assert len(got) == len(set(got))
        assert canon(got) == canon(brute_ideals(p))


def test_gray_matches_brute_and_is_gray():
    rng = random.Random(202)
    for _ in range(120):
        n = rng.randint(1, 10)
        p = random_poset(n, density=rng.choice([0.05, 0.2, 0.4, 0.7]), seed=rng.randrange(10**9))
        got = list(gray_ideals(p))
        assert canon(got) == canon(brute_ideals(p))
        ok, at = verify_gray(got)
        assert ok, at
        assert got[0] == frozenset()
        assert got[-1] == frozenset(range(p.n))


def test_gray_fixture_families():
    fixtures = [
        chain(7),
        antichain(6),
        from_relations(4, [(0, 1), (0, 2), (0, 3)]),
        from_relations(4, [(0, 3), (1, 3), (2, 3)]),
        from_relations(5, [(0, 1), (0, 2), (1, 3), (2, 3)]),
        from_relations(6, [(0, 2), (1, 2), (2, 3), (3, 4), (3, 5)]),
        layered_hard_poset(1),
        layered_hard_poset(2),
        layered_hard_poset(3),
    ]
    for p in fixtures:
        got = list(gray_ideals(p))
        assert canon(got) == canon(brute_ideals(p))
        assert verify_gray(got)[0]


def test_deltas_replay_to_same_stream():
    rng = random.Random(303)
    for _ in range(40):
        p = random_poset(rng.randint(1, 9), density=0.3, seed=rng.randrange(10**9))
        deltas = list(gray_ideal_deltas(p))
        assert all(len(a) + len(r) <= 3 for a, r in deltas)
        assert list(replay(set(), deltas)) == list(gray_ideals(p))


def test_count_ideals():
    assert count_ideals(chain(6)) == 7
    assert count_ideals(antichain(8)) == 256
    p = random_poset(9, 0.25, seed=17)
    assert count_ideals(p) == len(list(brute_ideals(p)))


def test_amortized_tick_ratio_is_flat():
    # delay per output should not grow with poset size within a family
    for dims, cap in [((20, 60, 180), 6.0), ((6, 9, 12), 15.0)]:
        ratios = []
        for n in dims:
            p = chain(n) if cap == 6.0 else antichain(n)
            eng = Engine()
            outs = sum(1 for _ in gray_ideal_deltas(p, eng))
            ratios.append(eng.t / outs)
        assert max(ratios) <= cap
        assert max(ratios) <= 2.0 * min(ratios)
