from itertools import chain, combinations

from hypothesis import given, settings
from hypothesis import strategies as st

from signforge.core import NEG, build_graph, switch
from signforge.frustration import (all_minimum_signatures, frustration_by_cover, minimum_signature_switch,
                                   frustration_index, is_minimum_signature)

from strategies import signed_graphs


def brute_force_index(g):
    """Independent oracle: minimize |E^-| over all 2^n switchings."""
    best = g.m
    for r in range(g.n + 1):
        for s in combinations(g.vertices, r):
            best = min(best, len(switch(g, frozenset(s)).negative_edge_ids))
    return best


def test_known_values():
    c3 = build_graph([(0, 1, "+"), (1, 2, "+"), (2, 0, "-")])
    assert frustration_index(c3).index == 1
    k4 = build_graph([(u, v, "-") for u in range(4) for v in range(u)])
    assert frustration_index(k4).index == 2
    loop = build_graph([(0, 0, "-")])
    assert frustration_index(loop).index == 1
    balanced = build_graph([(0, 1, "+"), (1, 2, "-"), (2, 0, "-")])
    assert frustration_index(balanced).index == 0


def test_witness_is_achieving():
    g = build_graph([(u, v, "-") for u in range(4) for v in range(u)])
    r = frustration_index(g)
    switched = switch(g, r.switch_set)
    assert switched.negative_edge_ids == r.negative_edge_ids
    assert len(r.negative_edge_ids) == r.index


def test_k4_all_negative_minimum_signatures_are_matchings():
    g = build_graph([(u, v, "-") for u in range(4) for v in range(u)])
    sigs = all_minimum_signatures(g)
    assert len(sigs) == 3  # the three perfect matchings
    for sig in sigs:
        ends = list(chain.from_iterable(
            (g.edges[e].u, g.edges[e].v) for e in sig))
        assert len(set(ends)) == 4
    assert not is_minimum_signature(g)  # six negatives is not minimum
    assert is_minimum_signature(minimum_signature_switch(g))


@given(signed_graphs(max_n=5, max_m=8))
@settings(max_examples=120, deadline=None)
def test_matches_brute_force(g):
    assert frustration_index(g).index == brute_force_index(g)


@given(signed_graphs(max_n=5, max_m=8))
@settings(max_examples=60, deadline=None)
def test_matches_cycle_cover_definition(g):
    assert frustration_index(g).index == frustration_by_cover(g)


@given(signed_graphs(max_n=5, max_m=8))
@settings(max_examples=60, deadline=None)
def test_every_minimum_signature_is_realized_by_some_switching(g):
    k = frustration_index(g).index
    sigs = set(all_minimum_signatures(g))
    assert all(len(sig) == k for sig in sigs)
    realized = set()
    for r in range(g.n + 1):
        for s in combinations(g.vertices, r):
            neg = tuple(sorted(switch(g, frozenset(s)).negative_edge_ids))
            if len(neg) == k:
                realized.add(neg)
    assert realized == sigs


def test_disconnected_graphs_sum_components():
    g = build_graph([(0, 1, "-"), (1, 2, "+"), (2, 0, "+"),
                     (3, 4, "-"), (4, 5, "+"), (5, 3, "+")])
    assert frustration_index(g).index == 2
