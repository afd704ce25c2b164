"""Frustration index by exhaustive switching, with witnesses.

The frustration index of a signed graph is the minimum number of negative
edges over all switchings.  We scan all switch sets component-by-component
(one anchor vertex per component is pinned, halving the space) in Gray-code
order so each step flips a single vertex and updates the negative count
incrementally.

Negative loops are unswitchable and each contributes exactly 1; positive
loops contribute 0.  Both are stripped before the scan and negative loops
are added back to every count.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional

from . import guards
from .core import NEG, SignedGraph, switch


@dataclass(frozen=True)
class FrustrationResult:
    index: int
    switch_set: frozenset
    negative_edge_ids: frozenset

    def to_json(self) -> dict:
        return {
            "frustration_index": self.index,
            "switch_set": sorted(map(str, self.switch_set)),
            "negative_edges": sorted(self.negative_edge_ids),
        }


def _component_scan(g: SignedGraph, comp_vertices: list) -> Iterator[tuple]:
    """Yield (neg_count, switched_vertex_frozenset) for one component.

    Scans the 2^(c-1) switchings that fix the anchor (first vertex), in
    Gray-code order with incremental updates.
    """
    anchor, *rest = comp_vertices
    free = rest
    c = len(free)
    # per-vertex list of (other_vertex_or_None, eid) for incident non-loops
    state = {v: False for v in comp_vertices}
    edge_sign = {}
    comp_set = set(comp_vertices)
    inc = {v: [] for v in free}
    for v in comp_vertices:
        for eid in g.incidence[v]:
            e = g.edges[eid]
            if e.is_loop or e.u not in comp_set:
                continue
            edge_sign[eid] = e.sign
    for v in free:
        for eid in g.incidence[v]:
            if not g.edges[eid].is_loop:
                inc[v].append(eid)

    neg = sum(1 for s in edge_sign.values() if s == NEG)
    yield neg, frozenset()
    switched: set = set()
    for step in range(1, 1 << c):
        # Gray code: flip the vertex at the index of the lowest set bit
        v = free[(step & -step).bit_length() - 1]
        for eid in inc[v]:
            e = g.edges[eid]
            o = e.other(v)
            # flipping v toggles every edge to a differently-switched endpoint
            edge_sign[eid] = -edge_sign[eid]
            neg += 1 if edge_sign[eid] == NEG else -1
        state[v] = not state[v]
        if state[v]:
            switched.add(v)
        else:
            switched.discard(v)
        yield neg, frozenset(switched)


def _loop_baseline(g: SignedGraph) -> int:
    return sum(1 for eid in g.loop_edge_ids if g.edges[eid].sign == NEG)


def frustration_index(g: SignedGraph, max_vertices: int = None) -> FrustrationResult:
    """Minimum negative-edge count over all switchings, with a witness.

    Ties are broken toward the lexicographically least switch set (by
    sorted vertex tuple).  The reported negative edge ids are those of
    switch(g, switch_set).
    """
    limit = guards.SWITCH_SEARCH_MAX_VERTICES if max_vertices is None else max_vertices
    guards.check(g.n, limit, "switching search")

    base = _loop_baseline(g)
    best_total = base
    best_sets = []  # per component, in g.components order
    for comp in g.components:
        vs = sorted(comp, key=lambda v: g.vindex[v])
        best = None
        best_set = None
        for neg, sw in _component_scan(g, vs):
            key = tuple(sorted(map(str, sw)))
            if best is None or neg < best or (
                    neg == best and key < best_set[0]):
                best = neg
                best_set = (key, sw)
        best_total += best
        best_sets.append(best_set[1])

    full = frozenset().union(*best_sets) if best_sets else frozenset()
    switched = switch(g, full)
    return FrustrationResult(best_total, full, switched.negative_edge_ids)


def all_minimum_signatures(g: SignedGraph,
                           max_vertices: int = None) -> tuple:
    """Every distinct minimum negative-edge set, as sorted eid tuples.

    Returned sorted lexicographically.  Distinct switch sets can induce
    the same negative edge set; duplicates are collapsed.
    """
    limit = guards.SWITCH_SEARCH_MAX_VERTICES if max_vertices is None else max_vertices
    guards.check(g.n, limit, "switching search")

    per_comp = []
    for comp in g.components:
        vs = sorted(comp, key=lambda v: g.vindex[v])
        best = None
        sets = []
        for neg, sw in _component_scan(g, vs):
            if best is None or neg < best:
                best = neg
                sets = [sw]
            elif neg == best:
                sets.append(sw)
        per_comp.append(sets)

    out = set()
    for combo in itertools.product(*per_comp) if per_comp else [()]:
        full = frozenset().union(*combo) if combo else frozenset()
        out.add(tuple(sorted(switch(g, full).negative_edge_ids)))
    return tuple(sorted(out))


def minimum_signature_switch(g: SignedGraph,
                             max_vertices: int = None) -> SignedGraph:
    """g switched into a minimum signature (the frustration_index witness)."""
    return switch(g, frustration_index(g, max_vertices).switch_set)


def is_minimum_signature(g: SignedGraph, max_vertices: int = None) -> bool:
    """True iff g already realizes its frustration index."""
    return len(g.negative_edge_ids) == frustration_index(g, max_vertices).index


def frustration_by_cover(g: SignedGraph, cap: int = None) -> int:
    """Independent oracle: size of a minimum negative-cycle cover.

    Equals the frustration index (a minimum signature is a cover, and a
    minimal cover is the negative set of some minimum signature).
    """
    from .cycles import min_negative_cycle_cover
    return len(min_negative_cycle_cover(g, cap))
