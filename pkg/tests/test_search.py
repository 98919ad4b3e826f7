from itertools import product

import pytest
from hypothesis import given, settings

from conftest import brute_verify, graphs, patterns
from urep.errors import BudgetTooSmall, TooManyLabelings
from urep.graphs import LabeledGraph, complete_graph, empty_graph, graphs_on, supplement
from urep.represent import construct, verify
from urep.search import (
    SearchConfig,
    classify_labelings,
    default_budget,
    find_representation,
    oracle_cross_check,
)
from urep.words import Pattern, complement

P = Pattern.parse
P3_CENTER_1 = LabeledGraph(3, frozenset({(1, 2), (1, 3)}))
P3_CENTER_2 = LabeledGraph(3, frozenset({(1, 2), (2, 3)}))


def naive_first(g, u, max_len):
    """First representing word by plain enumeration, no pruning."""
    for length in range(g.n, max_len + 1):
        for w in product(range(1, g.n + 1), repeat=length):
            if brute_verify(w, g, u):
                return w
    return None


def test_p3_center_1_first_hit_is_231():
    for w in [(1, 2, 3), (1, 3, 2), (2, 1, 3)]:
        assert not verify(w, P3_CENTER_1, P("12")).ok
    out = find_representation(P3_CENTER_1, P("12"), SearchConfig(6))
    assert out.found == (2, 3, 1)
    assert out.budget == 6


def test_p3_center_2_has_none_within_2n():
    out = find_representation(P3_CENTER_2, P("12"), SearchConfig(6))
    assert out.found is None
    assert naive_first(P3_CENTER_2, P("12"), 6) is None


def test_k2_under_11():
    assert find_representation(complete_graph(2), P("11"), SearchConfig(4)).found == (1, 2)
    assert find_representation(complete_graph(2), P("11"), SearchConfig(2)).found == (1, 2)


def test_budget_below_n_rejected():
    with pytest.raises(BudgetTooSmall):
        find_representation(complete_graph(3), P("11"), SearchConfig(2))


def test_default_budget():
    assert default_budget(P("12"), 3) == 6
    assert default_budget(P("21"), 4) == 8
    assert default_budget(P("11"), 3) is None
    assert default_budget(P("112"), 3) is None


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=3), patterns(2, 4))
def test_search_matches_naive_enumeration(g, u):
    budget = g.n + 3
    assert find_representation(g, u, SearchConfig(budget)).found == naive_first(g, u, budget)


@settings(max_examples=25, deadline=None)
@given(graphs(max_n=3), patterns(2, 3))
def test_search_monotone_in_budget(g, u):
    outcomes = [find_representation(g, u, SearchConfig(L)) for L in range(g.n, g.n + 5)]
    first = next((i for i, o in enumerate(outcomes) if o.found is not None), None)
    if first is not None:
        assert all(o.found == outcomes[first].found for o in outcomes[first:])
        assert all(o.words_examined == outcomes[first].words_examined for o in outcomes[first:])


def test_parallel_search_equals_sequential():
    for u in [P("12"), P("11"), P("112"), P("1122")]:
        for g in graphs_on(3):
            seq = find_representation(g, u, SearchConfig(7, threads=1))
            par = find_representation(g, u, SearchConfig(7, threads=3))
            assert seq == par


def test_threads_from_environment(monkeypatch):
    monkeypatch.setenv("UREP_THREADS", "2")
    assert find_representation(P3_CENTER_1, P("12"), SearchConfig(6)).found == (2, 3, 1)
    monkeypatch.setenv("UREP_THREADS", "junk")
    assert find_representation(P3_CENTER_1, P("12"), SearchConfig(6)).found == (2, 3, 1)


def test_exhaustive_mode_counts_all_hits():
    cfg = SearchConfig(4, stop_at_first=False)
    out = find_representation(empty_graph(2), P("11"), cfg)
    brute = sum(
        1
        for L in range(2, 5)
        for w in product((1, 2), repeat=L)
        if brute_verify(w, empty_graph(2), P("11"))
    )
    assert out.hits == brute
    assert out.found == naive_first(empty_graph(2), P("11"), 4)


def test_classify_labelings_p3():
    results = classify_labelings(P3_CENTER_2, P("12"), SearchConfig(6))
    assert [perm for perm, _ in results] == [
        (1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1)
    ]
    succeeded = {perm for perm, o in results if o.found is not None}
    # vertex 2 is the center; its label decides the outcome
    assert {perm[1] for perm in succeeded} == {1, 3}
    assert len(succeeded) == 4
    centre_1 = dict(results)[(2, 1, 3)]
    assert centre_1.found == (2, 3, 1)


def test_classify_labelings_k3_and_edgeless():
    for u in [P("111"), P("112"), P("121"), P("122")]:
        results = classify_labelings(complete_graph(3), u, SearchConfig(3))
        assert len(results) == 6
        assert all(o.found == (1, 2, 3) for _, o in results)
    for perm, outcome in classify_labelings(empty_graph(2), P("112"), SearchConfig(10)):
        assert outcome.found is not None
        constructed, _ = construct(empty_graph(2), P("112"))
        assert len(outcome.found) <= len(constructed)


def test_classify_labelings_guard():
    with pytest.raises(TooManyLabelings):
        classify_labelings(empty_graph(9), P("12"), SearchConfig(18))


def test_sweep_supplement_symmetry():
    # labeling l succeeds for u iff labeling n+1-l succeeds for the complemented pattern
    for h in graphs_on(3):
        for u in [P("12"), P("112"), P("11")]:
            a = dict(classify_labelings(h, u, SearchConfig(6)))
            b = dict(classify_labelings(h, u.complemented(), SearchConfig(6)))
            for perm, out in a.items():
                mirrored = tuple(4 - x for x in perm)
                assert (out.found is None) == (b[mirrored].found is None)
                if out.found is not None:
                    assert verify(complement(out.found, 3), supplement(h.relabel(perm)), u.complemented()).ok


@pytest.mark.parametrize("u, n_max", [("112", 3), ("121", 3), ("1122", 2), ("111", 3), ("122", 3), ("2121", 3)])
def test_oracle_cross_check(u, n_max):
    report = oracle_cross_check(n_max, P(u))
    assert report.ok
    assert report.graphs_checked == sum(2 ** (n * (n - 1) // 2) for n in range(1, n_max + 1))


def test_oracle_cross_check_limits():
    with pytest.raises(ValueError):
        oracle_cross_check(5, P("112"))
    report = oracle_cross_check(2, P("112"), SearchConfig(4))
    assert report.ok


@settings(max_examples=20, deadline=None)
@given(graphs(max_n=3), patterns(3, 4))
def test_search_never_empty_when_budget_covers_construction(g, u):
    word, _ = construct(g, u)
    out = find_representation(g, u, SearchConfig(len(word)))
    assert out.found is not None
    assert len(out.found) <= len(word)
