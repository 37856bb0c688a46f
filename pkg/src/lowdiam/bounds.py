"""Moore bound, ASPL lower bound, known optima, and the diameter-2 construction planner."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from lowdiam import algebra, constructions, generators
from lowdiam.graph import Graph, GraphError, MetricsReport, metrics

OPEN = "open"
UNKNOWN = "unknown"

# (degree, diameter) -> largest order; 57 is the open Moore case
KNOWN_OPTIMA: dict[tuple[int, int], object] = {
    (2, 2): 5,
    (3, 2): 10,
    (6, 2): 32,
    (7, 2): 50,
    (57, 2): OPEN,
}


def moore_bound(delta: int, d: int) -> int:
    if delta < 2 or d < 1:
        raise ValueError(f"Moore bound needs delta >= 2 and d >= 1, got ({delta}, {d})")
    return 1 + delta * sum((delta - 1) ** k for k in range(d))


def moore_ratio(order: int, delta: int, d: int) -> Fraction:
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    return Fraction(order, moore_bound(delta, d))


def percent(r: Fraction) -> str:
    """Render a ratio as a percentage with two decimals, rounding half up."""
    hundredths = (r * 10000 * 2 + 1) // 2
    return f"{hundredths // 100}.{hundredths % 100:02d}%"


def aspl_lower_bound(order: int, delta: int) -> Fraction:
    """Fill distance layers greedily: at most delta*(delta-1)^(k-1) vertices at distance k."""
    if order < 2 or delta < 2:
        raise ValueError(f"ASPL lower bound needs order >= 2 and delta >= 2, got ({order}, {delta})")
    if delta >= order:
        raise ValueError(f"delta {delta} >= order {order}: complete-graph regime, bound is 1")
    remaining = order - 1
    total = 0
    k = 1
    cap = delta
    while remaining:
        take = min(cap, remaining)
        total += k * take
        remaining -= take
        k += 1
        cap *= delta - 1
    return Fraction(total, order - 1)


def known_optimum(delta: int, d: int) -> object:
    return KNOWN_OPTIMA.get((delta, d), UNKNOWN)


def is_power_of_two(x: int) -> bool:
    return x > 0 and x & (x - 1) == 0


@dataclass(frozen=True)
class BoundReport:
    delta: int
    d: int
    moore_bound: int
    known_optimum: object
    brown: Optional[int] = None
    de_bruijn: Optional[int] = None
    power_of_two: Optional[int] = None

    def lower_bounds(self) -> dict[str, int]:
        out = {"brown": self.brown, "de_bruijn": self.de_bruijn, "power_of_two": self.power_of_two}
        return {k: v for k, v in out.items() if v is not None}


def construction_lower_bounds(delta: int, d: int) -> BoundReport:
    if delta < 2:
        raise ValueError(f"delta must be >= 2, got {delta}")
    return BoundReport(
        delta=delta,
        d=d,
        moore_bound=moore_bound(delta, d),
        known_optimum=known_optimum(delta, d),
        brown=delta * delta - delta + 1 if d == 2 and algebra.prime_power(delta - 1) else None,
        de_bruijn=(delta // 2) ** d if delta % 2 == 0 else None,
        power_of_two=delta * delta - delta + 2 if d == 2 and is_power_of_two(delta) else None,
    )


FAMILY_RANK = {"complete": 0, "kkg8": 1, "kg8": 2, "brown_field": 3, "brown_ring": 4, "de_bruijn": 5}


@dataclass(frozen=True)
class ConstructionPlan:
    family: str
    params: tuple[int, ...]
    order: int
    max_degree: int
    diameter: int
    duplicates: int = 0

    def label(self) -> str:
        s = f"{self.family}({', '.join(map(str, self.params))})"
        return s + (f"+dup{self.duplicates}" if self.duplicates else "")

    def build(self) -> Graph:
        g = _BUILDERS[self.family](*self.params)
        if self.duplicates:
            g = constructions.duplicate_vertices(constructions.DuplicationPlan(g, self.duplicates))
        return g


_BUILDERS: dict[str, Callable[..., Graph]] = {
    "complete": generators.complete,
    "kkg8": constructions.kkg8,
    "kg8": constructions.kg8,
    "brown_field": constructions.brown_field,
    "brown_ring": constructions.brown_ring,
    "de_bruijn": lambda t: generators.de_bruijn_undirected(t, 2),
}


def _brown_bases(order: int):
    q = 2
    while q * q + q + 1 <= order:
        if algebra.prime_power(q) and q <= algebra.MAX_FIELD_ORDER:
            yield "brown_field", q, q * q + q + 1, q + 1
        q += 1
    n = 2
    while n * n <= order:
        # prime n repeats the field construction
        if len(algebra.factorize(n)) > 1 or algebra.factorize(n)[0][1] > 1:
            base = algebra.ring_order_formula(n)
            if base <= order:
                yield "brown_ring", n, base, algebra.ring_degree_formula(n)
        n += 1


def plan(order: int, delta: int) -> list[ConstructionPlan]:
    """Diameter-<=2 constructions of exactly ``order`` vertices and max degree <= ``delta``."""
    if order < 2 or delta < 2:
        raise ValueError(f"plan needs order >= 2 and delta >= 2, got ({order}, {delta})")
    out = []
    if delta >= order - 1:
        out.append(ConstructionPlan("complete", (order,), order, order - 1, 1))
    if order % 8 == 0:
        ab = order // 8
        # larger outer clique first among equal degrees
        for a in range(ab, 1, -1):
            if ab % a == 0:
                b = ab // a
                if b >= 3 and 4 * a + b - 2 <= delta:
                    out.append(ConstructionPlan("kkg8", (a, b), order, 4 * a + b - 2, 2))
        n = order // 8
        if n >= 3 and n + 2 <= delta:
            out.append(ConstructionPlan("kg8", (n,), order, n + 2, 2))
    for family, param, base_order, base_degree in _brown_bases(order):
        dup = order - base_order
        if base_degree + dup <= delta:
            out.append(ConstructionPlan(family, (param,), order, base_degree + dup, 2, dup))
    t = round(order**0.5)
    if t >= 2 and t * t == order and 2 * t - 1 <= delta:
        out.append(ConstructionPlan("de_bruijn", (t,), order, 2 * t - 1, 2))
    out.sort(key=lambda p: (p.max_degree, FAMILY_RANK[p.family]))
    return out


@dataclass(frozen=True)
class Verdict:
    passed: bool
    failures: tuple[str, ...] = field(default=())


def certify(report: MetricsReport, order: int, max_degree: int, diameter: int) -> Verdict:
    fails = []
    if report.order != order:
        fails.append(f"order {report.order} != {order}")
    if report.max_degree > max_degree:
        fails.append(f"max degree {report.max_degree} > {max_degree}")
    if report.diameter is None:
        fails.append("graph is disconnected")
    elif report.diameter != diameter:
        fails.append(f"diameter {report.diameter} != {diameter}")
    return Verdict(not fails, tuple(fails))


def realize_and_certify(p: ConstructionPlan, with_girth: bool = False) -> tuple[Graph, MetricsReport, Verdict]:
    g = p.build()
    report = metrics(g, with_girth=with_girth)
    return g, report, certify(report, p.order, p.max_degree, p.diameter)


@dataclass(frozen=True)
class TableRow:
    delta: int
    order: int
    plan: ConstructionPlan
    moore_bound: int


def best_orders(max_degree: int, d: int = 2) -> list[TableRow]:
    """Largest planner-reachable order for each degree 2..max_degree."""
    if d != 2:
        raise GraphError("the planner only covers diameter 2")
    rows = []
    for delta in range(2, max_degree + 1):
        mb = moore_bound(delta, 2)
        for n in range(mb, 1, -1):
            plans = plan(n, delta)
            if plans:
                rows.append(TableRow(delta, n, plans[0], mb))
                break
    return rows
