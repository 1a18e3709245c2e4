import math
import random

import pytest

from simcores.errors import EnumerationCapError, InfinitePosetError, NotACoreError
from simcores.exact import binomial, catalan_number
from simcores.partitions import Partition
from simcores.posets import (
    build_gap_poset,
    consecutive_poset,
    core_to_ideal,
    ideal_to_core,
    multi_catalan,
)
from simcores.verify import popoviciu


def brute_gaps(gens, bound):
    # oracle: coin-style reachability up to the bound
    reachable = [False] * (bound + 1)
    reachable[0] = True
    for m in range(1, bound + 1):
        reachable[m] = any(m >= g and reachable[m - g] for g in gens)
    return [m for m in range(1, bound + 1) if not reachable[m]]


def test_gap_sets():
    assert build_gap_poset((5, 7, 13)).gaps == (1, 2, 3, 4, 6, 8, 9, 11, 16)
    assert build_gap_poset((1,)).gaps == ()
    p57 = build_gap_poset((5, 7))
    assert len(p57.gaps) == 12
    assert p57.frobenius_number == 23
    assert build_gap_poset((2, 3)).gaps == (1,)


def test_gaps_match_brute_force():
    for gens in [(5, 7, 13), (5, 7), (3, 4), (2, 7), (4, 5, 6), (6, 7, 8, 9, 10, 11)]:
        poset = build_gap_poset(gens)
        assert list(poset.gaps) == brute_gaps(gens, 200)
        for m in range(60):
            assert poset.is_representable(m) == (m not in set(brute_gaps(gens, 60)) and m >= 0)


def test_infinite_poset_rejected():
    with pytest.raises(InfinitePosetError) as err:
        build_gap_poset((4, 6))
    assert err.value.gcd == 2
    with pytest.raises(ValueError):
        build_gap_poset(())


def test_frobenius_matches_formula_for_pairs():
    for s, t in [(2, 3), (3, 4), (5, 7), (7, 9), (5, 11)]:
        assert build_gap_poset((s, t)).frobenius_number == s * t - s - t


def test_covers_definition():
    poset = build_gap_poset((5, 7, 13))
    gapset = set(poset.gaps)
    expected = {
        (a, b) for a in gapset for b in gapset if a - b in {5, 7, 13}
    }
    assert set(poset.covers) == expected
    assert set(poset.lower_covers(16)) == {3, 9, 11}


def test_order_is_transitive_closure_of_covers():
    # oracle: reachability over cover edges
    for gens in [(5, 7, 13), (5, 7), (4, 5, 6), (3, 8), (4, 9)]:
        poset = build_gap_poset(gens)
        up = {g: set() for g in poset.gaps}
        for a, b in poset.covers:
            up[b].add(a)
        for b in poset.gaps:
            reach = set()
            frontier = [b]
            while frontier:
                cur = frontier.pop()
                for nxt in up[cur]:
                    if nxt not in reach:
                        reach.add(nxt)
                        frontier.append(nxt)
            for a in poset.gaps:
                assert poset.leq(b, a) == (a == b or a in reach), (gens, a, b)


def test_leq_rejects_non_gaps():
    poset = build_gap_poset((2, 3))
    with pytest.raises(ValueError):
        poset.leq(1, 5)


def test_ideal_counts():
    assert sum(1 for _ in build_gap_poset((2, 3)).iter_lower_ideals()) == 2
    assert sum(1 for _ in build_gap_poset((3, 4, 5)).iter_lower_ideals()) == 4
    p57 = build_gap_poset((5, 7))
    assert sum(1 for _ in p57.iter_lower_ideals()) == 66
    assert p57.count_lower_ideals() == 66 == binomial(12, 5) // 12


def test_ideal_enumeration_is_deterministic_and_valid():
    poset = build_gap_poset((5, 7, 13))
    ideals = list(poset.iter_lower_ideals())
    assert ideals[0] == frozenset()
    assert ideals[-1] == frozenset(poset.gaps)
    assert ideals == list(poset.iter_lower_ideals())
    assert len(set(ideals)) == len(ideals)
    for ideal in ideals:
        assert poset.is_lower_ideal(ideal)
    assert not poset.is_lower_ideal({16})
    assert not poset.is_lower_ideal({1, 99})


def test_enumeration_cap():
    poset = build_gap_poset((5, 7))
    with pytest.raises(EnumerationCapError):
        list(poset.iter_lower_ideals(max_items=10))
    with pytest.raises(EnumerationCapError):
        poset.count_lower_ideals(max_states=2)


def test_count_matches_enumeration():
    for gens in [(2, 3), (3, 4, 5), (5, 7), (5, 7, 13), (3, 8), (7, 9), (5, 6, 7, 8)]:
        poset = build_gap_poset(gens)
        assert poset.count_lower_ideals() == sum(1 for _ in poset.iter_lower_ideals())


def test_count_matches_enumeration_on_random_generator_sets():
    rng = random.Random(42)
    checked = 0
    while checked < 25:
        gens = tuple(sorted(rng.sample(range(2, 15), rng.randint(2, 4))))
        if math.gcd(*gens) != 1:
            continue
        poset = build_gap_poset(gens)
        if len(poset.gaps) > 18:
            continue
        assert poset.count_lower_ideals() == sum(1 for _ in poset.iter_lower_ideals()), gens
        checked += 1


def test_enumerated_ideals_closed_under_order():
    poset = build_gap_poset((5, 7, 13))
    for ideal in poset.iter_lower_ideals():
        for a in ideal:
            for b in poset.gaps:
                if poset.leq(b, a):
                    assert b in ideal


def test_multi_catalan_values():
    assert multi_catalan(4, 1) == 14
    assert multi_catalan(4, 2) == 9
    for p in range(1, 5):
        assert multi_catalan(0, p) == 1
        assert multi_catalan(-3, p) == 1
    for s in range(13):
        assert multi_catalan(s, 1) == catalan_number(s)
    for p in range(1, 6):
        for s in range(1, p + 1):
            assert multi_catalan(s, p) == 2 ** (s - 1)
    with pytest.raises(ValueError):
        multi_catalan(3, 0)


def test_multi_catalan_matches_ideal_count():
    for p in range(1, 5):
        for s in range(1, 9):
            assert multi_catalan(s, p) == consecutive_poset(s, p).count_lower_ideals()


def test_consecutive_poset():
    assert consecutive_poset(1, 2).gaps == ()
    t42 = consecutive_poset(4, 2)
    assert t42.gaps == (1, 2, 3, 7)
    assert set(t42.lower_covers(7)) == {1, 2, 3}
    t132 = consecutive_poset(13, 2)
    assert len(t132.gaps) == 42
    assert t132.frobenius_number == 77
    assert t132.generators == (13, 14, 15)


def test_ideal_core_bijection_examples():
    p = build_gap_poset((5, 7, 13))
    assert ideal_to_core(p, {1, 4, 6, 11}) == Partition((8, 4, 3, 1))
    assert ideal_to_core(p, set()) == Partition()
    assert core_to_ideal(Partition((8, 4, 3, 1)), p) == {1, 4, 6, 11}
    assert core_to_ideal(Partition(), p) == frozenset()
    t = build_gap_poset((4, 5, 6))
    assert ideal_to_core(t, {1, 2, 3, 7}) == Partition((4, 1, 1, 1))
    p345 = build_gap_poset((3, 4, 5))
    assert core_to_ideal(Partition((2,)), p345) == {2}


def test_ideal_to_core_rejects_non_ideal():
    p = build_gap_poset((5, 7, 13))
    with pytest.raises(ValueError):
        ideal_to_core(p, {16})


def test_core_to_ideal_rejects_non_core():
    p34 = build_gap_poset((3, 4))
    with pytest.raises(NotACoreError) as err:
        core_to_ideal(Partition((2, 1)), p34)
    assert err.value.hook == 3 and err.value.divisor == 3


def test_bijection_round_trip_over_small_posets():
    for gens in [(5, 7), (5, 7, 13), (4, 5, 6), (3, 8), (6, 7), (5, 6, 7, 8, 9)]:
        poset = build_gap_poset(gens)
        assert len(poset.gaps) <= 20
        cores = []
        for ideal in poset.iter_lower_ideals():
            core = ideal_to_core(poset, ideal)
            assert core.is_multicore(gens)
            assert core_to_ideal(core, poset) == ideal
            cores.append(core)
        assert len(set(cores)) == len(cores)


def test_gap_membership_matches_popoviciu():
    for s, t in [(2, 3), (3, 5), (5, 7), (4, 9)]:
        poset = build_gap_poset((s, t))
        gapset = set(poset.gaps)
        for m in range(1, s * t + 1):
            assert (popoviciu(s, t, m) == 0) == (m in gapset)


def test_dot_export():
    poset = build_gap_poset((5, 7, 13))
    dot = poset.to_dot()
    assert dot.startswith("digraph")
    assert dot.count("->") == len(poset.covers)
    assert "16;" in dot
    # {4, 5, 9}: the edge 11 > 2 (difference 9) is implied by 11 > 7 > 2
    poset459 = build_gap_poset((4, 5, 9))
    assert (11, 2) in poset459.covers
    reduced = poset459.to_dot(transitive_reduce=True)
    assert "2 -> 11" not in reduced
    assert "7 -> 11" in reduced and "2 -> 7" in reduced


def test_json_export():
    data = build_gap_poset((2, 3)).to_json_dict()
    assert data == {"generators": [2, 3], "gaps": [1], "covers": []}
