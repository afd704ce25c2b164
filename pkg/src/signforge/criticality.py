"""Critical frustration: three equivalent tests, each with a certificate.

A signed graph with frustration index k is critically frustrated when
deleting any single edge drops the index to k-1.  Three checks:

* deletion   -- recompute the index after each single-edge deletion;
* signatures -- every edge is negative in some minimum signature;
* cuts       -- after switching to a minimum signature, every positive
                edge lies in some equilibrated cut (equally many positive
                and negative boundary edges).  Switching at such a cut
                keeps the signature minimum while making the edge
                negative, so this is the signature test in disguise.

All three agree; the oracle tests exercise that agreement on random
inputs.  Each returns per-edge witnesses for independent re-checking.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

from .core import NEG, POS, EdgeCut, SignedGraph, cut, switch
from .errors import PreconditionError
from .frustration import all_minimum_signatures, frustration_index

METHODS = ("deletion", "signatures", "cuts")


@dataclass(frozen=True)
class CriticalityCertificate:
    critical: bool
    k: int
    method: str
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"critical": self.critical, "k": self.k,
                "method": self.method, "details": self.details}


def equilibrated_cut_for_edge(g: SignedGraph, eid: int) -> Optional[EdgeCut]:
    """Smallest (then lex-least) equilibrated cut containing edge eid.

    Only one side of each cut is scanned: the side containing the least
    vertex.  Returns None when no equilibrated cut contains the edge.
    """
    e = g.edges[eid]
    if e.is_loop:
        return None
    vs = sorted(g.vertices, key=lambda v: g.vindex[v])
    anchor, rest = vs[0], vs[1:]
    for r in range(len(vs)):
        for combo in itertools.combinations(rest, r):
            side = frozenset((anchor,) + combo)
            if (e.u in side) == (e.v in side):
                continue
            c = cut(g, side)
            if c.equilibrated:
                return c
    return None


def _certify_deletion(g: SignedGraph, k: int) -> CriticalityCertificate:
    drops = {}
    critical = True
    for e in g.edges:
        sub = frustration_index(g.delete_edges([e.eid])).index
        drops[e.eid] = sub
        if sub != k - 1:
            critical = False
    return CriticalityCertificate(critical, k, "deletion",
                                  {"index_after_deletion": drops})


def _certify_signatures(g: SignedGraph, k: int) -> CriticalityCertificate:
    sigs = all_minimum_signatures(g)
    witness = {}
    critical = True
    for e in g.edges:
        hit = next((s for s in sigs if e.eid in s), None)
        witness[e.eid] = list(hit) if hit is not None else None
        if hit is None:
            critical = False
    return CriticalityCertificate(critical, k, "signatures",
                                  {"negative_in_signature": witness})


def _certify_cuts(g: SignedGraph, k: int) -> CriticalityCertificate:
    res = frustration_index(g)
    gmin = switch(g, res.switch_set)
    cuts = {}
    critical = True
    for e in gmin.edges:
        if e.sign == NEG:
            continue  # already negative in the minimum signature
        c = equilibrated_cut_for_edge(gmin, e.eid)
        cuts[e.eid] = c.to_json(gmin) if c is not None else None
        if c is None:
            critical = False
    return CriticalityCertificate(
        critical, k, "cuts",
        {"minimum_switch_set": sorted(map(str, res.switch_set)),
         "equilibrated_cuts": cuts})


def certify(g: SignedGraph, k: Optional[int] = None,
            method: str = "deletion") -> CriticalityCertificate:
    """Certificate that g is (or is not) critically k-frustrated.

    k defaults to the frustration index of g.  Passing an explicit k that
    differs from the index yields a non-critical certificate recording the
    mismatch.  k = 0 is never critical (nothing to drop).
    """
    if method not in METHODS:
        raise PreconditionError(f"unknown method {method!r}; use one of {METHODS}")
    index = frustration_index(g).index
    if k is None:
        k = index
    if index != k or k == 0:
        return CriticalityCertificate(
            False, k, method, {"frustration_index": index})
    if method == "deletion":
        return _certify_deletion(g, k)
    if method == "signatures":
        return _certify_signatures(g, k)
    return _certify_cuts(g, k)


def is_critical(g: SignedGraph, k: Optional[int] = None,
                method: str = "deletion") -> bool:
    return certify(g, k, method).critical
