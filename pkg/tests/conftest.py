from __future__ import annotations

import itertools
from pathlib import Path

import networkx as nx
import pytest

GOLDEN = Path(__file__).parent / "golden"

# criterion number -> list of (check name, passed); filled by test_acceptance
ACCEPTANCE: dict[int, list[tuple[str, bool]]] = {}


def to_nx(g) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges())
    return h


def brute_distance_matrix(g) -> list[list[int]]:
    """Distances by repeated neighborhood expansion over explicit vertex sets."""
    n = g.order
    out = []
    for s in range(n):
        row = [-1] * n
        row[s] = 0
        seen = {s}
        layer = {s}
        k = 0
        while layer:
            k += 1
            layer = {w for u in layer for w in g.neighbors(u)} - seen
            for w in layer:
                row[w] = k
            seen |= layer
        out.append(row)
    return out


def brute_girth(g):
    """Shortest cycle by networkx's minimum cycle basis."""
    basis = nx.minimum_cycle_basis(to_nx(g))
    return min((len(c) for c in basis), default=None)


def pairs(n):
    return itertools.combinations(range(n), 2)


@pytest.fixture
def golden():
    return GOLDEN


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        checks = ACCEPTANCE[num]
        ok = all(p for _, p in checks)
        failed = [name for name, p in checks if not p]
        line = f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}"
        if failed:
            line += "  (failed: " + ", ".join(failed) + ")"
        terminalreporter.write_line(line)
