import pytest

from signforge.core import Cycle, NEG, build_graph
from signforge.cycles import (enumerate_cycles, has_two_edge_disjoint_negative_cycles,
                              is_double_cover, is_leq2_cover,
                              max_edge_disjoint_negative_cycles,
                              min_negative_cycle_cover, negative_cycle_double_cover,
                              negative_cycles, packing_number)
from signforge.errors import CycleCapExceeded, PreconditionError
from signforge.frustration import frustration_index
from signforge.constructions import ghat


def k4_all_negative():
    return build_graph([(u, v, "-") for u in range(4) for v in range(u)])


def test_k4_cycle_census():
    g = k4_all_negative()
    cs = enumerate_cycles(g)
    assert len(cs) == 7  # 4 triangles + 3 four-cycles
    negs = negative_cycles(g)
    assert len(negs) == 4
    assert all(len(c.edge_ids) == 3 for c in negs)


def test_loops_and_digons_are_cycles():
    g = build_graph([(0, 0, "-"), (0, 1, "+"), (0, 1, "-")])
    cs = enumerate_cycles(g)
    assert sorted(len(c.edge_ids) for c in cs) == [1, 2]
    assert len(negative_cycles(g)) == 2


def test_cover_of_balanced_graph_is_empty():
    g = build_graph([(0, 1, "+"), (1, 2, "+"), (2, 0, "+")])
    assert min_negative_cycle_cover(g) == ()


def test_cover_meets_every_negative_cycle_and_matches_index():
    g = k4_all_negative()
    cover = min_negative_cycle_cover(g)
    assert len(cover) == frustration_index(g).index == 2
    for c in negative_cycles(g):
        assert c.edge_set & set(cover)


def test_packing_examples():
    assert packing_number(k4_all_negative()) == 1
    assert packing_number(ghat(0)) == 3
    two = build_graph([(0, 0, "-"), (1, 1, "-"), (0, 1, "+")])
    assert packing_number(two) == 2
    assert has_two_edge_disjoint_negative_cycles(two)
    assert not has_two_edge_disjoint_negative_cycles(k4_all_negative())


def test_packing_witness_is_disjoint_and_negative():
    g = ghat(1)
    fam = max_edge_disjoint_negative_cycles(g)
    seen = set()
    for c in fam:
        assert not (c.edge_set & seen)
        seen |= c.edge_set
    assert len(fam) == packing_number(g)


def test_double_cover_k4():
    g = k4_all_negative()
    dc = negative_cycle_double_cover(g, 2)
    assert dc is not None and len(dc) == 4
    assert is_double_cover(g, dc)
    assert is_leq2_cover(g, dc)


def test_double_cover_checks_index_precondition():
    g = k4_all_negative()
    with pytest.raises(PreconditionError):
        negative_cycle_double_cover(g, 3)


def test_single_loop_needs_a_repeated_cycle():
    g = build_graph([(0, 0, "-")])
    dc = negative_cycle_double_cover(g, 1)
    assert dc is not None and len(dc) == 2
    assert negative_cycle_double_cover(g, 1, distinct_only=True) is None


def test_leq2_cover_rejects_positive_members():
    g = build_graph([(0, 1, "+"), (1, 2, "+"), (2, 0, "+")])
    c = Cycle((0, 1, 2), (0, 1, 2, 0))
    with pytest.raises(PreconditionError):
        is_leq2_cover(g, [c])


def test_overfull_family_is_not_leq2():
    g = build_graph([(0, 1, "+"), (1, 2, "+"), (2, 0, "-")])
    c = negative_cycles(g)[0]
    assert is_leq2_cover(g, [c, c])
    assert not is_leq2_cover(g, [c, c, c])


def test_cycle_cap_is_enforced(monkeypatch):
    import signforge.guards as guards
    monkeypatch.setattr(guards, "CYCLE_CAP", 3)
    g = k4_all_negative()
    with pytest.raises(CycleCapExceeded):
        enumerate_cycles(g)
    monkeypatch.setenv("SIGNFORGE_GUARD_OVERRIDE", "1")
    assert len(enumerate_cycles(g)) == 7
