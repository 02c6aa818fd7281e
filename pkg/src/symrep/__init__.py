"""Vertex representativity and its symmetric counterpart for finite graphs."""
from .graph import (
    Graph,
    Graph6Error,
    GraphError,
    UnsupportedSize,
    connected_components,
    delete_vertices,
    disjoint_union,
    enumerate_connected,
    is_isomorphic,
    make_named,
    parse_graph6,
    to_graph6,
)
from .symmetry import automorphism_generators, orbit_partition, is_vertex_transitive
from .patterns import CopyFamily, contains_copy, enumerate_copies, parse_pattern
from .covers import (
    min_hitting_set,
    min_invariant_hitting_set,
    is_hitting,
    symmetrize,
)
from .lab import Certificate, analyze
from .kernels import BACKEND

__version__ = "0.1.0"
