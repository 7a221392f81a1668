import pytest

from flipwalk.oracle import (
    brute_antichains,
    brute_ideals,
    canon,
    replay,
    verify_gray,
    verify_permutation,
)
from flipwalk.poset import antichain, chain, from_relations, random_poset


def test_v_poset_ideals():
    v = from_relations(3, [(0, 2), (1, 2)])
    got = canon(brute_ideals(v))
    want = canon([set(), {0}, {1}, {0, 1}, {0, 1, 2}])
    assert got == want


def test_v_poset_antichains():
    v = from_relations(3, [(0, 2), (1, 2)])
    got = canon(brute_antichains(v))
    want = canon([set(), {0}, {1}, {2}, {0, 1}])
    assert got == want


def test_chain_counts():
    assert len(brute_ideals(chain(3))) == 4
    assert len(brute_antichains(chain(3))) == 4
    assert len(brute_ideals(chain(7))) == 8


def test_antichain_counts():
    assert len(brute_ideals(antichain(3))) == 8
    assert len(brute_antichains(antichain(3))) == 8


def test_ideal_antichain_bijection():
    # downsets correspond to their maximal elements, so counts agree
    for seed in range(20):
        p = random_poset(seed % 8 + 1, density=0.4, seed=seed)
        assert len(brute_ideals(p)) == len(brute_antichains(p))


def test_size_refusal():
    with pytest.raises(ValueError):
        brute_ideals(chain(23))
    with pytest.raises(ValueError):
        brute_antichains(antichain(23))


def test_verify_gray():
    ok, bad = verify_gray([{0}, {0, 1}, {1, 2}, set()])
    assert ok and bad is None
    ok, bad = verify_gray([set(), {0, 1, 2, 3}])
    assert not ok and bad == 1
    ok, bad = verify_gray([{0}, {1}, {2, 3, 4, 5}], k=3)
    assert not ok and bad == 2
    ok, bad = verify_gray([{0}, {0, 1}], k=1)
    assert ok


def test_verify_permutation():
    fam = [set(), {0}, {1}]
    assert verify_permutation([{1}, set(), {0}], fam)
    assert not verify_permutation([{1}, {1}, {0}], fam)
    assert not verify_permutation([{1}, {0}], fam)


def test_replay_roundtrip():
    deltas = [((0,), ()), ((1,), (0,)), ((), (1,))]
    states = list(replay(set(), deltas))
    assert states == [frozenset({0}), frozenset({1}), frozenset()]


def test_replay_rejects_bad_delta():
    with pytest.raises(ValueError):
        list(replay({0}, [((0,), ())]))
    with pytest.raises(ValueError):
        list(replay(set(), [((), (3,))]))
