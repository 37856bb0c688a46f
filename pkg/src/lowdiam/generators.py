"""Classic families: Petersen, hypercube, torus grid, undirected de Bruijn, complete, cycle.

Vertex ids: hypercube uses the binary encoding of the bit-vector, torus the
mixed-radix encoding with the first coordinate most significant, de Bruijn the
base-t encoding of the word with the first letter most significant.
"""

from __future__ import annotations

from dataclasses import dataclass

from lowdiam.graph import Graph, GraphError, build_graph


@dataclass(frozen=True)
class FamilyParams:
    family: str
    params: tuple[int, ...]

    @property
    def predicted_order(self) -> int:
        return _PREDICT[self.family](*self.params)[0]

    @property
    def predicted_max_degree(self) -> int:
        return _PREDICT[self.family](*self.params)[1]

    @property
    def predicted_diameter(self) -> int:
        return _PREDICT[self.family](*self.params)[2]


_PREDICT = {
    "petersen": lambda: (10, 3, 2),
    "hypercube": lambda n: (2**n, n, n),
    "torus": lambda m, n: (m**n, 2 * n, n * (m // 2)),
    # the quoted degree/diameter for the undirected de Bruijn graph; see de_bruijn_undirected
    "debruijn": lambda t, n: (t**n, 2 * t, n),
    "complete": lambda n: (n, n - 1, 1 if n >= 2 else 0),
    "cycle": lambda n: (n, 2, n // 2),
}


def petersen() -> Graph:
    """Vertices (i, j), i in {0, 1}, j in Z/5, with id 5i + j.

    Same i: j = l +- 1 (mod 5).  Across sides, (0, j) ~ (1, l) iff j = 2l (mod 5).
    Applying the cross rule from both endpoints would give a 4-regular graph.
    """
    edges = []
    for j in range(5):
        edges.append((j, (j + 1) % 5))
        edges.append((5 + j, 5 + (j + 1) % 5))
    for l in range(5):
        edges.append(((2 * l) % 5, 5 + l))
    return build_graph(10, edges)


def hypercube(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"hypercube dimension must be >= 1, got {n}")
    return build_graph(2**n, [(v, v ^ (1 << b)) for v in range(2**n) for b in range(n)])


def torus_grid(m: int, n: int) -> Graph:
    if m <= 2:
        raise GraphError(f"torus modulus must be > 2, got {m}")
    if n < 1:
        raise GraphError(f"torus dimension must be >= 1, got {n}")
    N = m**n
    edges = []
    for v in range(N):
        for axis in range(n):
            place = m ** (n - 1 - axis)
            digit = (v // place) % m
            w = v - digit * place + ((digit + 1) % m) * place
            edges.append((v, w))
    return build_graph(N, edges)


def de_bruijn_undirected(t: int, n: int) -> Graph:
    """Words over {0..t-1} of length n; u ~ w when w is a left shift of u or vice versa.

    Self-loops (constant words) are dropped and parallel edges collapse, so
    for n == 2 the largest degree is 2t - 1 rather than 2t.
    """
    if t < 2 or n < 2:
        raise GraphError(f"de Bruijn graph needs t >= 2 and n >= 2, got ({t}, {n})")
    N = t**n
    top = t ** (n - 1)
    edges = []
    for v in range(N):
        tail = (v % top) * t
        for x in range(t):
            w = tail + x
            if w != v:
                edges.append((v, w))
    return build_graph(N, edges)


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"complete graph needs n >= 1, got {n}")
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return build_graph(n, [(v, (v + 1) % n) for v in range(n)])
