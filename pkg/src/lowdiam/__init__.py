"""Deterministic diameter-2 network topologies and exact hop-distance metrics."""

from lowdiam.bounds import aspl_lower_bound, moore_bound, moore_ratio, plan, realize_and_certify
from lowdiam.constructions import brown_field, brown_ring, duplicate_vertices, g8, kg8, kkg8
from lowdiam.graph import Graph, aspl, build_graph, diameter, metrics

__all__ = [
    "Graph",
    "aspl",
    "aspl_lower_bound",
    "brown_field",
    "brown_ring",
    "build_graph",
    "diameter",
    "duplicate_vertices",
    "g8",
    "kg8",
    "kkg8",
    "metrics",
    "moore_bound",
    "moore_ratio",
    "plan",
    "realize_and_certify",
]
