"""Command line: gen / analyze / verify / bounds / search / table.

Exit codes: 0 pass, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from fractions import Fraction
from pathlib import Path
from typing import Callable, Optional

from lowdiam import algebra, bounds, constructions, generators
from lowdiam.edgelist import emit_edge_list, parse_edge_list
from lowdiam.graph import Graph, MetricsReport, metrics

CSV_HEADER = (
    "name,order,min_degree,max_degree,regular,connected,diameter,girth,aspl_num,aspl_den,aspl,"
    "moore_bound,moore_ratio_pct,aspl_lower_num,aspl_lower_den"
)


class UsageError(ValueError):
    pass


# family -> (arity, builder, predicted (order, max degree, diameter or None))
Family = tuple[int, Callable[..., Graph], Callable[..., tuple[int, int, Optional[int]]]]

FAMILIES: dict[str, Family] = {
    "petersen": (0, generators.petersen, lambda: (10, 3, 2)),
    "hypercube": (1, generators.hypercube, lambda n: (2**n, n, n)),
    "torus": (2, generators.torus_grid, lambda m, n: (m**n, 2 * n, n * (m // 2))),
    "debruijn": (2, generators.de_bruijn_undirected, lambda t, n: (t**n, 2 * t, n)),
    "complete": (1, generators.complete, lambda n: (n, n - 1, 1 if n > 1 else None)),
    "cycle": (1, generators.cycle, lambda n: (n, 2, n // 2)),
    "g8": (0, constructions.g8, lambda: (8, 3, 2)),
    "brown-f": (1, constructions.brown_field, lambda q: (q * q + q + 1, q + 1, 2)),
    "brown-z": (
        1,
        constructions.brown_ring,
        lambda n: (algebra.ring_order_formula(n), algebra.ring_degree_formula(n), 2),
    ),
    "kg8": (1, constructions.kg8, lambda n: (8 * n, n + 2, 2 if n >= 3 else None)),
    "kkg8": (2, constructions.kkg8, lambda a, b: (8 * a * b, 4 * a + b - 2, 2 if a >= 2 else None)),
}


def _ints(tokens: list[str]) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise UsageError(f"expected integer parameters, got {tokens}") from None


def build_family(family: str, params: list[str]) -> tuple[Graph, tuple[int, int, Optional[int]]]:
    if family not in FAMILIES:
        raise UsageError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)} or dup")
    arity, builder, predict = FAMILIES[family]
    if len(params) != arity:
        raise UsageError(f"{family} takes {arity} parameter(s), got {len(params)}")
    args = _ints(params)
    return builder(*args), predict(*args)


def _read_graph(path: str) -> Graph:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_edge_list(text)


def _fmt_aspl(x: Optional[Fraction]) -> str:
    return "" if x is None else f"{float(x):.6g}"


def _lower_bound(report: MetricsReport) -> Optional[Fraction]:
    n, d = report.order, report.max_degree
    if n < 2 or d < 1:
        return None
    if d >= n - 1:
        return Fraction(1)
    if d < 2:
        return None
    return bounds.aspl_lower_bound(n, d)


def _moore(report: MetricsReport) -> tuple[Optional[int], Optional[Fraction]]:
    if report.max_degree < 2 or not report.diameter:
        return None, None
    mb = bounds.moore_bound(report.max_degree, report.diameter)
    return mb, Fraction(report.order, mb)


def csv_row(name: str, r: MetricsReport) -> list[str]:
    mb, ratio = _moore(r)
    lb = _lower_bound(r)
    a = r.aspl
    blank = lambda x: "" if x is None else str(x)  # noqa: E731
    return [
        name,
        str(r.order),
        str(r.min_degree),
        str(r.max_degree),
        str(r.is_regular).lower(),
        str(r.is_connected).lower(),
        blank(r.diameter),
        blank(r.girth),
        blank(a.numerator if a is not None else None),
        blank(a.denominator if a is not None else None),
        _fmt_aspl(a),
        blank(mb),
        "" if ratio is None else bounds.percent(ratio).rstrip("%"),
        blank(lb.numerator if lb is not None else None),
        blank(lb.denominator if lb is not None else None),
    ]


def format_report(r: MetricsReport) -> str:
    mb, ratio = _moore(r)
    lb = _lower_bound(r)
    a = r.aspl
    lines = [
        f"order:          {r.order}",
        f"degree:         min {r.min_degree}, max {r.max_degree}",
        f"regular:        {'yes' if r.is_regular else 'no'}",
        f"connected:      {'yes' if r.is_connected else 'no'}",
        f"diameter:       {r.diameter if r.diameter is not None else 'disconnected'}",
        f"girth:          {r.girth if r.girth is not None else 'acyclic'}",
        f"aspl:           {a} ({_fmt_aspl(a)})" if a is not None else "aspl:           undefined",
    ]
    if mb is not None:
        lines.append(f"moore bound:    {mb}")
        lines.append(f"moore ratio:    {bounds.percent(ratio)}")
    if lb is not None:
        lines.append(f"aspl lower:     {lb} ({_fmt_aspl(lb)})")
        if a is not None:
            lines.append(f"aspl gap:       {a - lb} ({_fmt_aspl(a - lb)})")
    return "\n".join(lines) + "\n"


def cmd_gen(args) -> int:
    if args.family == "dup":
        if not args.params:
            raise UsageError("dup needs a base family")
        if args.delta is None:
            raise UsageError("dup needs --delta")
        base, (bo, bd, _) = build_family(args.params[0], args.params[1:])
        plan = constructions.DuplicationPlan(base, args.delta, args.target, args.clique)
        g = constructions.duplicate_vertices(plan)
        extra = args.delta + (1 if args.clique else 0)
        predicted = (bo + args.delta, bd + extra, 2)
    else:
        g, predicted = build_family(args.family, args.params)
    text = emit_edge_list(g)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    r = metrics(g, with_girth=False)
    po, pd, pD = predicted
    print(f"predicted: order {po}, max degree {pd}, diameter {pD if pD is not None else '?'}", file=sys.stderr)
    print(f"measured:  order {r.order}, max degree {r.max_degree}, diameter {r.diameter}", file=sys.stderr)
    return 0


def cmd_analyze(args) -> int:
    g = _read_graph(args.file)
    r = metrics(g)
    if args.csv:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_HEADER.split(","))
        name = args.name or (Path(args.file).stem if args.file != "-" else "stdin")
        w.writerow(csv_row(name, r))
        sys.stdout.write(buf.getvalue())
    else:
        sys.stdout.write(format_report(r))
    return 0


def verify_graph(g: Graph, order: int, degree: int, diameter: int, regular: bool) -> list[str]:
    """Constraint violations: exact order, max degree <= degree, diameter <= bound."""
    r = metrics(g, with_girth=False)
    fails = []
    if r.order != order:
        fails.append(f"order {r.order} != {order}")
    if r.max_degree > degree:
        fails.append(f"max degree {r.max_degree} > {degree}")
    if regular and not (r.is_regular and r.max_degree == degree):
        fails.append(f"not {degree}-regular (degrees {r.min_degree}..{r.max_degree})")
    if r.diameter is None:
        fails.append("disconnected")
    elif r.diameter > diameter:
        fails.append(f"diameter {r.diameter} > {diameter}")
    return fails


def cmd_verify(args) -> int:
    g = _read_graph(args.file)
    fails = verify_graph(g, args.order, args.degree, args.diameter, args.regular)
    for f in fails:
        print(f"FAIL: {f}", file=sys.stderr)
    print("PASS" if not fails else "FAIL")
    return 1 if fails else 0


def cmd_bounds(args) -> int:
    rep = bounds.construction_lower_bounds(args.degree, args.diameter)
    print(f"degree:        {rep.delta}")
    print(f"diameter:      {rep.d}")
    print(f"moore bound:   {rep.moore_bound}")
    print(f"known optimum: {rep.known_optimum}")
    for name, value in rep.lower_bounds().items():
        print(f"lower bound ({name}): {value} ({bounds.percent(Fraction(value, rep.moore_bound))} of Moore)")
    return 0


def cmd_search(args) -> int:
    plans = bounds.plan(args.order, args.degree)
    if not plans:
        print(f"no diameter-2 construction for order {args.order} within degree {args.degree}", file=sys.stderr)
        return 1
    for i, p in enumerate(plans, 1):
        print(f"{i}. {p.label()}: order {p.order}, max degree {p.max_degree}, diameter {p.diameter}")
    if args.realize:
        g, r, verdict = bounds.realize_and_certify(plans[0])
        text = emit_edge_list(g)
        if args.out:
            Path(args.out).write_text(text)
        else:
            sys.stdout.write(text)
        status = "pass" if verdict.passed else "FAIL: " + "; ".join(verdict.failures)
        print(f"certified {plans[0].label()}: max degree {r.max_degree}, diameter {r.diameter}, aspl {r.aspl}: {status}",
              file=sys.stderr)
        return 0 if verdict.passed else 1
    return 0


def cmd_table(args) -> int:
    rows = bounds.best_orders(args.max_degree, args.diameter)
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["degree", "order", "family", "moore_bound", "moore_ratio_pct"])
    for row in rows:
        w.writerow([row.delta, row.order, row.plan.label(), row.moore_bound,
                    bounds.percent(Fraction(row.order, row.moore_bound)).rstrip("%")])
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lowdiam", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a graph and write its edge list")
    p.add_argument("family", help=f"{' | '.join(FAMILIES)} | dup")
    p.add_argument("params", nargs="*", help="family parameters; for dup, a base family and its parameters")
    p.add_argument("--out", help="output file (default stdout)")
    p.add_argument("--target", type=int, help="dup: vertex to copy (default lowest-id min-degree vertex)")
    p.add_argument("--delta", type=int, help="dup: number of copies")
    p.add_argument("--clique", action="store_true", help="dup: join the copies and the original")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("analyze", help="print metrics of an edge-list file")
    p.add_argument("file", help="edge-list path, or - for stdin")
    p.add_argument("--csv", action="store_true")
    p.add_argument("--name", help="name column for --csv (default file stem)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="check order, degree and diameter constraints")
    p.add_argument("file", nargs="?", default="-", help="edge-list path, or - for stdin (default)")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--diameter", type=int, required=True)
    p.add_argument("--regular", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="Moore bound and construction lower bounds")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--diameter", type=int, required=True)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("search", help="rank diameter-2 constructions for an (order, degree) target")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--realize", action="store_true", help="build and certify the top plan")
    p.add_argument("--out", help="with --realize: output file (default stdout)")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("table", help="best planner order per degree, as CSV")
    p.add_argument("--diameter", type=int, default=2)
    p.add_argument("--max-degree", type=int, required=True)
    p.set_defaults(func=cmd_table)
    return ap


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
