"""Diameter-2 constructions: Brown graphs, vertex duplication, G8 and (multiple) star products.

Product vertex ids are row-major: ``(u, v) -> |V(G2)| * u + v``.  ``kkg8`` nests
as ``(K_a id, (K_b id, G8 id))``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

from lowdiam import algebra
from lowdiam.generators import complete
from lowdiam.graph import Graph, GraphError, build_graph, degree_stats

Arc = tuple[int, int]
Perm = tuple[int, ...]


def _brown(points, ctx) -> Graph:
    edges = []
    for a, v in enumerate(points):
        for b in range(a + 1, len(points)):
            if algebra.dot3(v, points[b], ctx) == 0:
                edges.append((a, b))
    return build_graph(len(points), edges)


def brown_field(q: int) -> Graph:
    """Lines of F_q^3, adjacent when orthogonal."""
    f = algebra.make_field(q)
    return _brown(algebra.projective_points_field(f), f)


def brown_ring(n: int) -> Graph:
    """The same recipe over Z/nZ, on unit-scaling classes of unimodular vectors."""
    r = algebra.make_ring(n)
    return _brown(algebra.projective_points_ring(r), r)


@dataclass(frozen=True)
class DuplicationPlan:
    base: Graph
    delta: int
    target: Optional[int] = None
    clique: bool = False

    def resolved_target(self) -> int:
        if self.target is not None:
            return self.target
        lo = degree_stats(self.base).min_degree
        return next(v for v in range(self.base.order) if self.base.degree(v) == lo)


def duplicate_vertices(plan: DuplicationPlan) -> Graph:
    """Add ``delta`` twins of the target vertex.

    Each twin copies the target's neighborhood.  With ``clique`` the target and
    all twins are also joined to one another.
    """
    g = plan.base
    if plan.delta < 0:
        raise GraphError(f"delta must be >= 0, got {plan.delta}")
    t = plan.resolved_target()
    if not 0 <= t < g.order:
        raise GraphError(f"target {t} outside [0, {g.order})")
    if plan.delta and g.degree(t) < 1:
        raise GraphError(f"target {t} is isolated")
    edges = g.edges()
    twins = list(range(g.order, g.order + plan.delta))
    for c in twins:
        edges.extend((c, w) for w in g.neighbors(t))
    if plan.clique:
        group = [t] + twins
        edges.extend((a, b) for i, a in enumerate(group) for b in group[i + 1 :])
    return build_graph(g.order + plan.delta, edges)


G8_VERTICES = ((0, 0), (0, 1), (1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2))
G8_INDEX = {v: i for i, v in enumerate(G8_VERTICES)}


def g8() -> Graph:
    """The 8-vertex building block; 3-regular with diameter 2."""
    edges = []
    for a, (i, j) in enumerate(G8_VERTICES):
        for b, (k, l) in enumerate(G8_VERTICES):
            if a < b and ((i, k) in {(0, 1), (1, 0), (2, 2)} or ((i, k) in {(1, 2), (2, 1)} and j == l)):
                edges.append((a, b))
    return build_graph(8, edges)


def _phi(v: tuple[int, int]) -> tuple[int, int]:
    i, j = v
    if i == 0:
        return (0, 1 - j)
    if i == 1:
        return (2, (j + 1) % 3)
    return (1, (j - 1) % 3)


PHI: Perm = tuple(G8_INDEX[_phi(v)] for v in G8_VERTICES)

# one row per level l; row[v] is the image of G8 vertex v, applied inside every K_b block
_PSI_ROWS = (
    {(0, 0): (0, 0), (1, 0): (0, 1), (1, 1): (1, 0), (1, 2): (2, 1),
     (0, 1): (1, 1), (2, 0): (2, 2), (2, 1): (1, 2), (2, 2): (2, 0)},
    {(0, 0): (0, 1), (1, 0): (1, 0), (1, 1): (2, 1), (1, 2): (0, 0),
     (0, 1): (2, 2), (2, 0): (1, 2), (2, 1): (2, 0), (2, 2): (1, 1)},
    {(0, 0): (1, 0), (1, 0): (2, 1), (1, 1): (0, 0), (1, 2): (0, 1),
     (0, 1): (1, 2), (2, 0): (2, 0), (2, 1): (1, 1), (2, 2): (2, 2)},
    {(0, 0): (2, 1), (1, 0): (0, 0), (1, 1): (0, 1), (1, 2): (1, 0),
     (0, 1): (2, 0), (2, 0): (1, 1), (2, 1): (2, 2), (2, 2): (1, 2)},
)  # fmt: skip
PSI_G8: tuple[Perm, ...] = tuple(tuple(G8_INDEX[row[v]] for v in G8_VERTICES) for row in _PSI_ROWS)


@dataclass(frozen=True)
class StarSpec:
    """Orientation of G1's edges and, per arc, m permutations of V(G2)."""

    g1: Graph
    arcs: tuple[Arc, ...]
    table: Mapping[Arc, tuple[Perm, ...]] = field(hash=False)

    @property
    def multiplicity(self) -> int:
        return len(next(iter(self.table.values()))) if self.table else 1

    def validate(self, g2_order: int) -> None:
        seen = set()
        for u, v in self.arcs:
            key = (min(u, v), max(u, v))
            if not self.g1.has_edge(u, v):
                raise GraphError(f"arc {(u, v)} is not an edge of G1")
            if key in seen:
                raise GraphError(f"edge {key} oriented twice")
            seen.add(key)
        if len(seen) != self.g1.size:
            raise GraphError("not every edge of G1 is oriented")
        for arc in self.arcs:
            perms = self.table.get(arc)
            if not perms:
                raise GraphError(f"no permutation for arc {arc}")
            for p in perms:
                if len(p) != g2_order or set(p) != set(range(g2_order)):
                    raise GraphError(f"entry for arc {arc} is not a bijection on V(G2)")


def low_to_high(g1: Graph) -> tuple[Arc, ...]:
    return tuple(g1.edges())


def uniform_spec(g1: Graph, perms: Sequence[Perm]) -> StarSpec:
    """Spec that applies the same permutation list on every low-to-high arc."""
    arcs = low_to_high(g1)
    perms = tuple(tuple(p) for p in perms)
    return StarSpec(g1, arcs, {a: perms for a in arcs})


def multiple_star_product(spec: StarSpec, g2: Graph) -> Graph:
    """(u, v) ~ (w, x) iff u == w and v ~ x in G2, or (u, w) is an arc and x = psi(u, w, l)(v) for some l."""
    spec.validate(g2.order)
    m = g2.order
    edges = [(m * u + v, m * u + x) for u in range(spec.g1.order) for v, x in g2.edges()]
    for u, w in spec.arcs:
        for perm in spec.table[(u, w)]:
            edges.extend((m * u + v, m * w + perm[v]) for v in range(m))
    return build_graph(spec.g1.order * m, edges)


def star_product(spec: StarSpec, g2: Graph) -> Graph:
    if spec.table and spec.multiplicity != 1:
        raise GraphError("star_product takes exactly one permutation per arc")
    return multiple_star_product(spec, g2)


def kg8(n: int) -> Graph:
    """K_n star G8 under phi; order 8n, (n+2)-regular, diameter 2 for n >= 3."""
    if n < 1:
        raise GraphError(f"kg8 needs n >= 1, got {n}")
    return star_product(uniform_spec(complete(n), [PHI]), g8())


def psi_tables(b: int) -> tuple[Perm, ...]:
    """The four level permutations lifted to V(K_b star G8), fixing the K_b coordinate."""
    return tuple(tuple(8 * k + row[g] for k in range(b) for g in range(8)) for row in PSI_G8)


def kkg8(a: int, b: int) -> Graph:
    """4-multiple star product of K_a over kg8(b); order 8ab, degree 4a+b-2."""
    if a < 1:
        raise GraphError(f"kkg8 needs a >= 1, got {a}")
    if b < 3:
        raise GraphError(f"kkg8 needs b >= 3 so the inner factor has diameter 2, got {b}")
    return multiple_star_product(uniform_spec(complete(a), psi_tables(b)), kg8(b))


PROP1_A = ((0, 0), (1, 0), (1, 1), (1, 2))
PROP1_B = ((0, 1), (2, 0), (2, 1), (2, 2))
PROP1_C = ((0, 0), (0, 1), (1, 0), (2, 1))
PROP1_D = ((1, 1), (2, 2), (1, 2), (2, 0))


def subset_adjacent(g: Graph, s: Sequence[int], t: Sequence[int]) -> bool:
    """Every s has a distinct neighbor in t and every t has a distinct neighbor in s."""
    fwd = all(any(x != y and g.has_edge(x, y) for y in t) for x in s)
    back = all(any(y != x and g.has_edge(y, x) for x in s) for y in t)
    return fwd and back


@dataclass(frozen=True)
class SubsetAdjacencyReport:
    a: tuple[tuple[int, int], ...]
    b: tuple[tuple[int, int], ...]
    c: tuple[tuple[int, int], ...]
    d: tuple[tuple[int, int], ...]
    a_b_partition: bool
    c_d_partition: bool
    c_adjacent_d: bool
    a_maps_to_c: bool
    b_maps_to_d: bool

    @property
    def passed(self) -> bool:
        return all((self.a_b_partition, self.c_d_partition, self.c_adjacent_d, self.a_maps_to_c, self.b_maps_to_d))


def psi_image_set(v: tuple[int, int]) -> set[tuple[int, int]]:
    return {G8_VERTICES[row[G8_INDEX[v]]] for row in PSI_G8}


def verify_prop1_machinery() -> SubsetAdjacencyReport:
    """Evaluate the subset facts the diameter-2 argument for kkg8 rests on."""
    everything = set(G8_VERTICES)

    def partition(x, y):
        return set(x) | set(y) == everything and not set(x) & set(y) and len(x) + len(y) == 8

    g = g8()
    idx = lambda vs: [G8_INDEX[v] for v in vs]  # noqa: E731
    return SubsetAdjacencyReport(
        a=PROP1_A,
        b=PROP1_B,
        c=PROP1_C,
        d=PROP1_D,
        a_b_partition=partition(PROP1_A, PROP1_B),
        c_d_partition=partition(PROP1_C, PROP1_D),
        c_adjacent_d=subset_adjacent(g, idx(PROP1_C), idx(PROP1_D)),
        a_maps_to_c=all(psi_image_set(v) == set(PROP1_C) for v in PROP1_A),
        b_maps_to_d=all(psi_image_set(v) == set(PROP1_D) for v in PROP1_B),
    )
