"""Graph Golf style edge lists: one ``u v`` pair per line, 0-indexed.

Emission is canonical (u < v, lines sorted) so files compare byte-for-byte.
A leading ``# order N`` comment records trailing isolated vertices.
"""

from __future__ import annotations

import re
from typing import Optional

from lowdiam.graph import Graph, GraphError, build_graph

_ORDER_HEADER = re.compile(r"#\s*order\s+(\d+)\s*$")


class EdgeListError(GraphError):
    def __init__(self, line: int, msg: str):
        super().__init__(f"line {line}: {msg}")
        self.line = line


def emit_edge_list(g: Graph, comments: tuple[str, ...] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    implied = 1 + max((v for nbrs in g.adjacency for v in nbrs), default=-1)
    if implied != g.order:
        lines.append(f"# order {g.order}")
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "".join(line + "\n" for line in lines)


def parse_edge_list(text: str, explicit_order: Optional[int] = None) -> Graph:
    edges = []
    header_order = None
    top = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            m = _ORDER_HEADER.match(line)
            if m:
                header_order = int(m.group(1))
            continue
        toks = line.split()
        if len(toks) != 2:
            raise EdgeListError(lineno, f"expected two vertex ids, got {len(toks)} tokens")
        try:
            u, v = int(toks[0]), int(toks[1])
        except ValueError:
            raise EdgeListError(lineno, f"non-integer token in {line!r}") from None
        if u < 0 or v < 0:
            raise EdgeListError(lineno, "negative vertex id")
        if u == v:
            raise EdgeListError(lineno, f"self-loop at vertex {u}")
        if explicit_order is not None and max(u, v) >= explicit_order:
            raise EdgeListError(lineno, f"vertex id {max(u, v)} >= order {explicit_order}")
        edges.append((u, v))
        top = max(top, u, v)
    order = explicit_order if explicit_order is not None else max(header_order or 0, top + 1)
    if order < 1:
        raise EdgeListError(0, "empty edge list and no order given")
    if top >= order:
        raise EdgeListError(0, f"vertex id {top} >= declared order {order}")
    return build_graph(order, edges)
