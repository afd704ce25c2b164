"""Named-graph catalog: machine-readable copies of the studied graphs.

Entries ship as .sg (+ optional .rot) files in the data directory with a
manifest of expected properties.  verify() recomputes everything from the
shipped files — frustration index, criticality by all three methods,
irreducibility, decomposability, star-class membership, and the face
profile where an embedding is shipped — and compares against the
manifest.  scripts/build_catalog_data.py regenerates the data files.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from typing import Optional

from .core import SignedGraph, parse_sg
from .criticality import METHODS, is_critical
from .cycles import has_two_edge_disjoint_negative_cycles
from .errors import SignforgeError
from .frustration import frustration_index
from .planar import RotationSystem, parse_rot, verify_planar_critical
from .structure import is_decomposable, is_irreducible


class CatalogMismatch(SignforgeError):
    """A recomputed property differs from the catalog's expected value."""


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    description: str
    graph: SignedGraph
    rotation: Optional[RotationSystem]
    expected: dict
    tags: tuple


def _data_root():
    return resources.files("signforge.data")


def _manifest() -> list:
    return json.loads((_data_root() / "catalog.json").read_text())


def names() -> tuple:
    return tuple(rec["name"] for rec in _manifest())


def entries_with_tag(tag: str) -> tuple:
    return tuple(rec["name"] for rec in _manifest() if tag in rec["tags"])


def get(name: str) -> CatalogEntry:
    for rec in _manifest():
        if rec["name"] == name:
            graph = parse_sg((_data_root() / rec["sg"]).read_text())
            rot = None
            if rec.get("rot"):
                rot = parse_rot((_data_root() / rec["rot"]).read_text())
            return CatalogEntry(rec["name"], rec["description"], graph, rot,
                                rec["expected"], tuple(rec["tags"]))
    raise SignforgeError(f"no catalog entry named {name!r}")


def verify(name: str) -> dict:
    """Recompute all expected properties of one entry; raise on mismatch."""
    entry = get(name)
    exp = entry.expected
    g = entry.graph
    got: dict = {}

    got["ell"] = frustration_index(g).index
    k = got["ell"]
    got["critical"] = all(is_critical(g, k, m) for m in METHODS)
    got["irreducible"] = is_irreducible(g)
    got["decomposable"] = is_decomposable(g, k)
    if got["critical"] and got["irreducible"]:
        got["in_s_star"] = not has_two_edge_disjoint_negative_cycles(g)
    else:
        got["in_s_star"] = False

    if entry.rotation is not None:
        report = verify_planar_critical(g, entry.rotation, k,
                                        check_critical=False)
        profile = {}
        pexp = exp.get("planar_face_profile", {})
        if "faces" in pexp:
            profile["faces"] = report.face_count
        if "all_negative" in pexp:
            profile["all_negative"] = report.all_faces_negative
        if "one_negative_edge_per_face" in pexp:
            profile["one_negative_edge_per_face"] = \
                report.one_negative_edge_per_face
        if "negative_faces_at_most" in pexp:
            profile["negative_faces_at_most"] = pexp["negative_faces_at_most"] \
                if report.negative_face_count <= pexp["negative_faces_at_most"] \
                else report.negative_face_count
        got["planar_face_profile"] = profile

    mismatches = {key: (exp[key], got[key]) for key in exp
                  if got.get(key) != exp[key]}
    if mismatches:
        raise CatalogMismatch(f"{name}: expected vs got {mismatches}")
    return got


def verify_all() -> dict:
    """name -> recomputed record; raises on the first mismatch."""
    return {name: verify(name) for name in names()}
