import json
from itertools import combinations
from math import comb

import pytest

from hawide.classify import Collection, is_noninterlacing
from hawide.counting import (
    KNOWN_VALUES,
    InterlaceGraph,
    catalan_count,
    count_independent_sets_brute,
    count_wide,
    count_wide_stats,
    enumerate_collections,
    reference_counts,
)
from hawide.errors import BudgetExceeded, CapExceeded
from hawide.tuples import sets_interlace_brute


def test_count_examples():
    assert count_wide(2, 1) == 5
    assert count_wide(3, 2) == 47
    for d in range(1, 6):
        assert count_wide(1, d) == 2


@pytest.mark.parametrize("n,d", [(3, 1), (2, 2), (3, 2), (2, 3), (4, 1)])
def test_graph_edges_by_brute_force(n, d):
    g = InterlaceGraph(n, d)
    for i, j in combinations(range(len(g)), 2):
        assert bool(g.adj[i] >> j & 1) == sets_interlace_brute(g.sets[i], g.sets[j])
    assert all(not (a >> i & 1) for i, a in enumerate(g.adj))


@pytest.mark.parametrize("n,d", [(2, 1), (3, 1), (2, 2), (3, 2), (2, 3)])
def test_count_matches_subset_scan(n, d):
    g = InterlaceGraph(n, d)
    assert count_wide(n, d) == count_independent_sets_brute(g.adj)


@pytest.mark.parametrize("n", range(1, 9))
def test_catalan(n):
    assert count_wide(n, 1) == comb(2 * n + 2, n + 1) // (n + 2) == catalan_count(n)


def test_recurrence_n2():
    w = {d: count_wide(2, d) for d in range(1, 8)}
    for d in range(3, 8):
        assert w[d] == w[d - 1] + w[d - 2] - 1


def test_n2_cyclic_words():
    """A subset of the d+2 indecomposables is wide iff its indicator word has
    no cyclic 11, or is all ones."""
    for d in range(1, 8):
        L = d + 2
        good = 0
        for word in range(1 << L):
            ones = word == (1 << L) - 1
            rot = ((word << 1) | (word >> (L - 1))) & ((1 << L) - 1)
            if ones or not (word & rot):
                good += 1
        assert count_wide(2, d) == good


def test_enumerate_examples():
    assert [c.to_list() for c in enumerate_collections(1, 1)] == [[], [[1, 2]]]
    got = [c.to_list() for c in enumerate_collections(2, 1)]
    assert got == [[], [[1, 2]], [[1, 3]], [[2, 3]], [[1, 2, 3]]]
    assert len(list(enumerate_collections(3, 1))) == 14


@pytest.mark.parametrize("n,d", [(3, 2), (4, 2), (3, 3), (2, 4)])
def test_enumeration_unique_noninterlacing_and_counted(n, d):
    colls = list(enumerate_collections(n, d))
    assert len(colls) == len(set(colls)) == count_wide(n, d)
    assert all(is_noninterlacing(c) for c in colls)
    assert colls == list(enumerate_collections(n, d))


def test_enumerate_cap():
    with pytest.raises(CapExceeded):
        enumerate_collections(3, 2, cap=46)
    assert len(list(enumerate_collections(3, 2, cap=47))) == 47


def test_budget():
    with pytest.raises(BudgetExceeded):
        count_wide_stats(8, 2, budget_secs=0.01)


def test_jobs_give_same_count():
    assert count_wide(5, 2, jobs=2) == count_wide(5, 2, jobs=1) == 4083


def test_stats_json():
    data = count_wide_stats(3, 2).to_dict()
    assert data["w"] == "47" and data["n"] == 3 and data["d"] == 2
    assert data["nodes"] > 0
    json.dumps(data)


def test_reference_counts():
    assert reference_counts(5, 1) == 132
    assert reference_counts(2, 5) == 30 == 19 + 12 - 1
    assert reference_counts(6, 3) is None
    assert reference_counts(1, 9) == 2
    for (n, d), w in KNOWN_VALUES.items():
        assert reference_counts(n, d) == w


def test_collection_helpers():
    c = Collection.of(3, 1, [(3, 4), (1, 2)])
    assert c.to_list() == [[1, 2], [3, 4]]
    assert str(c) == "{{1,2},{3,4}}"
    assert str(Collection(3, 1, frozenset())) == "{}"
