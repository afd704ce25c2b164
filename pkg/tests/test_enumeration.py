import random

from signforge.core import build_graph, canonical_form, switch
from signforge.enumeration import (EnumBounds, enumerate_critical,
                                   enumerate_signed_graphs)


def test_single_vertex_stream():
    # on one vertex only negative loops survive (no isolated vertices,
    # positive loops excluded as inert)
    b = EnumBounds(max_vertices=1, max_negative_loops_per_vertex=2)
    got = sorted(g.m for g in enumerate_signed_graphs(b))
    assert got == [1, 2]


def test_two_vertex_stream_counts():
    b = EnumBounds(max_vertices=2, max_multiplicity_per_pair=2,
                   max_negative_loops_per_vertex=1, max_edges=4)
    classes = list(enumerate_signed_graphs(b))
    keys = [canonical_form(g) for g in classes]
    assert len(keys) == len(set(keys))
    # the n=1 members (one negative loop) plus connected/disconnected
    # two-vertex shapes; spot-check a few expected members
    expect = [
        build_graph([(0, 0, "-")]),
        build_graph([(0, 1, "+")]),
        build_graph([(0, 1, "+"), (0, 1, "-")]),
        build_graph([(0, 0, "-"), (1, 1, "-")]),
    ]
    for g in expect:
        assert canonical_form(g) in keys


def test_stream_has_no_duplicate_classes_up_to_three_vertices():
    b = EnumBounds(max_vertices=3, max_multiplicity_per_pair=2,
                   max_negative_loops_per_vertex=1, max_edges=5)
    keys = [canonical_form(g) for g in enumerate_signed_graphs(b)]
    assert len(keys) == len(set(keys))


def test_relabeling_audit():
    # every emitted class is stable under a random relabel-and-switch
    rng = random.Random(20260826)
    b = EnumBounds(max_vertices=3, max_multiplicity_per_pair=2,
                   max_negative_loops_per_vertex=1, max_edges=4)
    for g in enumerate_signed_graphs(b):
        vs = list(g.vertices)
        perm = dict(zip(vs, rng.sample(vs, len(vs))))
        s = frozenset(v for v in vs if rng.random() < 0.5)
        gs = switch(g, s)
        relabeled = build_graph([(perm[e.u], perm[e.v], e.sign)
                                 for e in gs.edges])
        assert canonical_form(relabeled) == canonical_form(g)


def test_critically_1_classes_are_negative_cycles():
    b = EnumBounds(max_vertices=3, max_multiplicity_per_pair=2,
                   max_negative_loops_per_vertex=2, max_edges=6)
    from signforge.cycles import negative_cycles
    for g in enumerate_critical(b, 1):
        comps = g.components
        for comp in comps:
            sub = g.restrict(frozenset(
                e.eid for e in g.edges if e.u in comp))
            assert all(g.degree(v) == 2 for v in comp)


def test_irreducible_critically_1_is_single_loop():
    b = EnumBounds(max_vertices=3, max_multiplicity_per_pair=2,
                   max_negative_loops_per_vertex=2, max_edges=6)
    got = list(enumerate_critical(b, 1, irreducible_only=True))
    assert len(got) == 1
    g = got[0]
    assert g.n == 1 and g.m == 1 and g.edges[0].is_loop


def test_connected_only_filter():
    b = EnumBounds(max_vertices=2, max_multiplicity_per_pair=1,
                   max_negative_loops_per_vertex=1, max_edges=4,
                   connected_only=True)
    for g in enumerate_signed_graphs(b):
        assert len(g.components) == 1
