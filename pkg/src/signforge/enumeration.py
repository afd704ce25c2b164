"""Exhaustive generation of small signed multigraphs up to switching
isomorphism.

Raw candidates are assignments of (multiplicity, negative count) to each
vertex pair plus a negative-loop count per vertex.  Positive loops are
excluded (they affect nothing studied here), as are isolated vertices, so
vertex count is a class invariant.  One representative per switching-
isomorphism class survives a brute-force canonical-form filter.

The critical-graph filter runs on the raw integer encoding before any
deduplication: frustration index and per-edge-deletion drops are computed
by direct switch-mask scans, which keeps the classification runs at
minutes even though the raw space is in the millions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional

from . import guards
from .core import NEG, POS, SignedGraph, build_graph, canonical_form
from .errors import GuardExceeded


@dataclass(frozen=True)
class EnumBounds:
    max_vertices: int
    max_multiplicity_per_pair: int = 2
    max_negative_loops_per_vertex: int = 2
    max_edges: int = 10
    connected_only: bool = False

    def check(self) -> None:
        if min(self.max_vertices, self.max_multiplicity_per_pair,
               self.max_negative_loops_per_vertex, self.max_edges) < 0:
            raise GuardExceeded("bounds must be non-negative")
        guards.check(self.max_vertices, guards.ENUM_MAX_VERTICES,
                     "enumeration (vertices)")
        guards.check(self.max_edges, guards.ENUM_MAX_EDGES,
                     "enumeration (edges)")


# raw candidate: (n, loops, pairs) with loops a tuple of per-vertex negative
# loop counts and pairs a tuple of (mult, neg) per pair of _pair_list(n)

def _pair_list(n: int) -> tuple:
    return tuple(itertools.combinations(range(n), 2))


def _raw_candidates(b: EnumBounds) -> Iterator[tuple]:
    """All raw candidates within bounds, no isolated vertices, deterministic
    lexicographic order."""
    pair_opts = [(m, neg) for m in range(b.max_multiplicity_per_pair + 1)
                 for neg in range(m + 1)]
    for n in range(1, b.max_vertices + 1):
        pairs = _pair_list(n)
        loop_opts = range(b.max_negative_loops_per_vertex + 1)
        for loops in itertools.product(loop_opts, repeat=n):
            lsum = sum(loops)
            if lsum > b.max_edges:
                continue
            budget = b.max_edges - lsum

            def assign(i: int, acc: list, used: int) -> Iterator[tuple]:
                if i == len(pairs):
                    yield tuple(acc)
                    return
                for opt in pair_opts:
                    if used + opt[0] > budget:
                        continue
                    acc.append(opt)
                    yield from assign(i + 1, acc, used + opt[0])
                    acc.pop()

            for assignment in assign(0, [], 0):
                deg = [2 * l for l in loops]
                for (u, v), (mult, _) in zip(pairs, assignment):
                    deg[u] += mult
                    deg[v] += mult
                if any(d == 0 for d in deg):
                    continue
                if b.connected_only and not _raw_connected(n, pairs, assignment):
                    continue
                yield (n, loops, assignment)


def _raw_connected(n: int, pairs: tuple, assignment: tuple) -> bool:
    adj = {i: set() for i in range(n)}
    for (u, v), (mult, _) in zip(pairs, assignment):
        if mult:
            adj[u].add(v)
            adj[v].add(u)
    seen = {0}
    stack = [0]
    while stack:
        w = stack.pop()
        for o in adj[w]:
            if o not in seen:
                seen.add(o)
                stack.append(o)
    return len(seen) == n


def _raw_frustration(n: int, loops: tuple, pairs: tuple,
                     assignment) -> int:
    """Min negative count over switch masks, on the raw encoding."""
    best = None
    for mask in range(1 << (n - 1)):  # vertex n-1 pinned
        neg = 0
        for (u, v), (mult, nneg) in zip(pairs, assignment):
            if ((mask >> u) ^ (mask >> v)) & 1:
                neg += mult - nneg
            else:
                neg += nneg
        if best is None or neg < best:
            best = neg
            if best == 0:
                break
    return best + sum(loops)


def _raw_is_critical(n: int, loops: tuple, pairs: tuple,
                     assignment: tuple, k: int) -> bool:
    """Every single-edge deletion drops the index to k-1.

    Parallel same-sign edges are interchangeable, so one deletion per
    (pair, sign) class suffices; removing a negative loop always drops the
    index by exactly one.
    """
    lst = list(assignment)
    for i, (mult, nneg) in enumerate(lst):
        variants = []
        if nneg >= 1:
            variants.append((mult - 1, nneg - 1))
        if mult - nneg >= 1:
            variants.append((mult - 1, nneg))
        for var in variants:
            lst[i] = var
            drop = _raw_frustration(n, loops, pairs, tuple(lst))
            lst[i] = (mult, nneg)
            if drop != k - 1:
                return False
    return True


def _raw_to_graph(n: int, loops: tuple, pairs: tuple,
                  assignment: tuple) -> SignedGraph:
    edge_list = []
    for v, cnt in enumerate(loops):
        edge_list += [(v, v, NEG)] * cnt
    for (u, v), (mult, nneg) in zip(pairs, assignment):
        edge_list += [(u, v, NEG)] * nneg
        edge_list += [(u, v, POS)] * (mult - nneg)
    return build_graph(edge_list, isolated=range(n))


def enumerate_signed_graphs(b: EnumBounds) -> Iterator[SignedGraph]:
    """One representative per switching-isomorphism class within bounds.

    Deterministic: candidates stream in lexicographic order, first class
    member wins, and the emitted value is rebuilt from its canonical key.
    """
    b.check()
    from .core import from_canonical_form
    seen = set()
    for n, loops, assignment in _raw_candidates(b):
        g = _raw_to_graph(n, loops, _pair_list(n), assignment)
        key = canonical_form(g)
        if key in seen:
            continue
        seen.add(key)
        yield from_canonical_form(key)


def enumerate_critical(b: EnumBounds, k: int,
                       irreducible_only: bool = False,
                       non_decomposable_only: bool = False) -> tuple:
    """All critically k-frustrated classes within bounds.

    irreducible_only additionally drops proper subdivisions;
    non_decomposable_only drops decomposable graphs.
    """
    b.check()
    from .core import from_canonical_form
    from .structure import is_decomposable, is_irreducible

    seen = set()
    out = []
    for n, loops, assignment in _raw_candidates(b):
        pairs = _pair_list(n)
        # critical graphs have minimum degree >= 2 (a pendant edge is in
        # no cycle, so deleting it cannot change the index)
        deg = [2 * l for l in loops]
        for (u, v), (mult, _) in zip(pairs, assignment):
            deg[u] += mult
            deg[v] += mult
        if any(d < 2 for d in deg):
            continue
        if _raw_frustration(n, loops, pairs, assignment) != k:
            continue
        if not _raw_is_critical(n, loops, pairs, assignment, k):
            continue
        g = _raw_to_graph(n, loops, pairs, assignment)
        if irreducible_only and not is_irreducible(g):
            continue
        if non_decomposable_only and is_decomposable(g, k):
            continue
        key = canonical_form(g)
        if key in seen:
            continue
        seen.add(key)
        out.append(from_canonical_form(key))
    return tuple(out)
