from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lowdiam.bounds import (
    OPEN,
    UNKNOWN,
    ConstructionPlan,
    aspl_lower_bound,
    best_orders,
    construction_lower_bounds,
    known_optimum,
    moore_bound,
    moore_ratio,
    percent,
    plan,
    realize_and_certify,
)
from lowdiam.generators import petersen
from lowdiam.graph import metrics


def test_moore_bound_values():
    assert moore_bound(8, 8) == 7686401
    assert moore_bound(3, 2) == 10
    for d in range(1, 10):
        assert moore_bound(2, d) == 2 * d + 1
    for delta in range(2, 60):
        assert moore_bound(delta, 2) == delta * delta + 1
    assert moore_bound(64, 64) > 2**64
    with pytest.raises(ValueError):
        moore_bound(1, 2)
    with pytest.raises(ValueError):
        moore_bound(3, 0)


def test_moore_ratio():
    assert percent(moore_ratio(734820, 8, 8)) == "9.56%"
    assert moore_ratio(381, 20, 2) == Fraction(381, 401)
    assert percent(moore_ratio(381, 20, 2)) == "95.01%"
    assert moore_ratio(256, 22, 2) == Fraction(256, 485)
    assert percent(moore_ratio(256, 22, 2)) == "52.78%"
    with pytest.raises(ValueError):
        moore_ratio(0, 3, 2)


def test_percent_rounding():
    assert percent(Fraction(1, 8)) == "12.50%"
    assert percent(Fraction(1, 3)) == "33.33%"
    assert percent(Fraction(2, 3)) == "66.67%"
    assert percent(Fraction(1)) == "100.00%"


def _layer_fill(order, delta):
    # independent: count vertices per distance layer of the Moore tree
    layers = []
    left = order - 1
    width = delta
    while left > 0:
        layers.append(min(width, left))
        left -= layers[-1]
        width *= delta - 1
    return Fraction(sum((i + 1) * c for i, c in enumerate(layers)), order - 1)


def test_aspl_lower_bound():
    assert aspl_lower_bound(256, 22) == Fraction(22 + 2 * 233, 255) == Fraction(488, 255)
    assert aspl_lower_bound(10, 3) == Fraction(5, 3)
    assert aspl_lower_bound(5, 4) == 1
    for n in range(3, 60):
        for d in range(2, n):
            assert aspl_lower_bound(n, d) == _layer_fill(n, d)
    with pytest.raises(ValueError):
        aspl_lower_bound(5, 5)


def test_known_optimum():
    assert known_optimum(6, 2) == 32
    assert known_optimum(7, 2) == 50
    assert known_optimum(3, 2) == 10 == metrics(petersen()).order
    assert known_optimum(2, 2) == 5
    assert known_optimum(57, 2) == OPEN
    assert known_optimum(9, 2) == UNKNOWN


def test_construction_lower_bounds():
    rep = construction_lower_bounds(20, 2)
    assert rep.brown == 381 and rep.de_bruijn == 100 and rep.power_of_two is None
    rep = construction_lower_bounds(8, 8)
    assert rep.de_bruijn == 65536 and rep.brown is None and rep.moore_bound == 7686401
    rep = construction_lower_bounds(8, 2)
    assert rep.power_of_two == 58 and rep.brown == 57
    assert construction_lower_bounds(7, 2).lower_bounds() == {}
    assert construction_lower_bounds(6, 2).lower_bounds() == {"brown": 31, "de_bruijn": 9}
    for delta in range(2, 40):
        for d in range(1, 6):
            rep = construction_lower_bounds(delta, d)
            assert all(v <= rep.moore_bound for v in rep.lower_bounds().values())


def test_plan_examples():
    top = plan(256, 22)[0]
    assert (top.family, top.params) == ("kkg8", (4, 8))
    top = plan(381, 20)[0]
    assert (top.family, top.params, top.duplicates) == ("brown_field", (19,), 0)
    plans = plan(100, 20)
    labels = [p.label() for p in plans]
    assert "brown_field(9)+dup9" in labels and "de_bruijn(10)" in labels
    assert labels.index("brown_field(9)+dup9") < labels.index("de_bruijn(10)")
    assert plan(5, 4)[0].family == "complete"
    assert plan(200, 3) == []
    with pytest.raises(ValueError):
        plan(1, 3)


def test_plan_ranking_is_by_degree():
    for order, delta in [(100, 30), (256, 40), (64, 20), (121, 25)]:
        degs = [p.max_degree for p in plan(order, delta)]
        assert degs == sorted(degs) and all(d <= delta for d in degs)


@pytest.mark.parametrize(
    "order,delta",
    [(n, d) for n in (8, 24, 32, 48, 57, 64, 91, 100, 121, 133, 160, 256, 364, 381, 512) for d in (6, 12, 22, 30, 40)],
)
def test_every_plan_certifies(order, delta):
    for p in plan(order, delta):
        g, r, verdict = realize_and_certify(p)
        assert verdict.passed, (p, verdict.failures)
        assert r.order == order and r.max_degree <= delta
        if r.is_regular and r.diameter == 2:
            assert r.aspl == aspl_lower_bound(r.order, r.max_degree)


def test_realize_examples():
    g, r, v = realize_and_certify(ConstructionPlan("kkg8", (4, 8), 256, 22, 2))
    assert v.passed and r.diameter == 2 and r.aspl == Fraction(488, 255)
    g, r, v = realize_and_certify(ConstructionPlan("kg8", (2,), 16, 4, 2))
    assert not v.passed and r.diameter == 3
    g, r, v = realize_and_certify(plan(5, 4)[0])
    assert v.passed and r.diameter == 1


def test_best_orders_table():
    rows = {r.delta: r for r in best_orders(22)}
    assert rows[6].order == 32 and rows[6].plan.family == "kg8"
    assert rows[20].order == 381
    assert all(r.order <= r.moore_bound for r in rows.values())
    assert rows[22].order >= 256


@given(st.integers(2, 512), st.integers(2, 40))
@settings(max_examples=60, deadline=None)
def test_plans_certify_property(order, delta):
    plans = plan(order, delta)
    for p in plans[:3]:
        _, r, verdict = realize_and_certify(p)
        assert verdict.passed, (p, verdict.failures)
        assert r.order == order and r.max_degree <= delta and r.diameter <= 2
