"""Signed-multigraph frustration toolkit: indices, criticality
certificates, structure tests, generators, catalog, and enumeration."""

__version__ = "0.1.0"

from .core import (Edge, SignedGraph, build_graph, switch, cut, cycle_sign,
                   Cycle, parse_sg, serialize_sg, switching_isomorphic,
                   canonical_form, is_balanced)
from .frustration import frustration_index, all_minimum_signatures
from .cycles import (enumerate_cycles, negative_cycles,
                     min_negative_cycle_cover,
                     max_edge_disjoint_negative_cycles,
                     negative_cycle_double_cover)
from .criticality import certify, is_critical, equilibrated_cut_for_edge
from .structure import (find_k4_minus_subdivision, is_irreducible,
                        reduce_to_irreducible, subdivide, suppress,
                        in_s_star, find_decompositions, is_decomposable,
                        check_packing_equality)
from .planar import RotationSystem, faces, verify_planar_critical, parse_rot, serialize_rot
from .constructions import ghat, ghat_planar, h_join
