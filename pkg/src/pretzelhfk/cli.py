"""Command-line front end: compute, sweep, verify, and Alexander oracle.

Output formats: json (the full record), csv (s,delta_times_2,rank rows),
latex (a tabular of the rank table), ascii (a dot plot in the (s, mu) plane).
Delta gradings are serialized as delta_times_2 so every field is an integer.
Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Dict, List, Optional

from . import __version__
from .alexander import DiagramError, build_pretzel_diagram, fox_alexander, pretzel_determinant
from .algebra import HalfInteger, LaurentPolynomial, euler_characteristic, normalize_alexander
from .curves import CurveError, TangleParams
from .hfk import classify, compute_hfk, verify


def _record(params: TangleParams, with_checks: bool = True) -> Dict:
    start = time.perf_counter()
    if with_checks:
        report = verify(params)
        table = report.table
        checks = dict(report.checks)
    else:
        table = compute_hfk(params)
        checks = {}
    alex = normalize_alexander(euler_characteristic(table))
    p, q, r = params.pretzel_triple()
    generators = [
        {"s": s, "delta_times_2": d.twice, "rank": rk}
        for (s, d), rk in sorted(
            table.entries.items(), key=lambda kv: (kv[0][0], kv[0][1].twice)
        )
    ]
    return {
        "knot": {
            "a": params.a,
            "b": params.b,
            "c": params.c,
            "sign": params.sign,
            "p": p,
            "q": q,
            "r": r,
        },
        "generators": generators,
        "alexander": [
            {"exp": e, "coeff": alex[e]}
            for e in sorted(alex.coeffs)
        ],
        "classification": classify(params).shape.value,
        "checks": checks,
        "meta": {
            "version": __version__,
            "seconds": round(time.perf_counter() - start, 6),
        },
    }


def _format_csv(record: Dict) -> str:
    lines = ["s,delta_times_2,rank"]
    for g in record["generators"]:
        lines.append(f"{g['s']},{g['delta_times_2']},{g['rank']}")
    return "\n".join(lines)


def _format_latex(record: Dict) -> str:
    k = record["knot"]
    lines = [
        r"\begin{tabular}{r|r|r}",
        rf"\multicolumn{{3}}{{c}}{{$P({k['p']},{k['q']},{k['r']})$}} \\",
        r"$s$ & $\delta$ & rank \\ \hline",
    ]
    for g in record["generators"]:
        delta = HalfInteger(g["delta_times_2"])
        frac = (
            str(delta.twice // 2)
            if delta.twice % 2 == 0
            else rf"\frac{{{delta.twice}}}{{2}}"
        )
        lines.append(rf"{g['s']} & ${frac}$ & {g['rank']} \\")
    lines.append(r"\end{tabular}")
    return "\n".join(lines)


def _format_ascii(record: Dict) -> str:
    """Dot plot in the (s, mu) plane, mu = s - delta.

    The delta grading is relative; the plot shifts it so the lowest delta
    line lies on mu = s.
    """
    gens = record["generators"]
    low = min(g["delta_times_2"] for g in gens)
    points = {}
    for g in gens:
        mu2 = 2 * g["s"] - (g["delta_times_2"] - low)
        assert mu2 % 2 == 0
        points[(g["s"], mu2 // 2)] = g["rank"]
    s_vals = [s for s, _ in points]
    mu_vals = [mu for _, mu in points]
    k = record["knot"]
    out = [
        f"P({k['p']},{k['q']},{k['r']})  rank per (s, mu) cell; "
        "delta offset is conventional (lowest delta line placed on mu = s)"
    ]
    width = 3
    for mu in range(max(mu_vals), min(mu_vals) - 1, -1):
        row = f"mu={mu:>3} |"
        for s in range(min(s_vals), max(s_vals) + 1):
            rk = points.get((s, mu))
            row += f"{rk:>{width}}" if rk else " " * (width - 1) + "."
        out.append(row)
    axis = "       +" + "-" * ((max(s_vals) - min(s_vals) + 1) * width)
    out.append(axis)
    out.append("     s =" + "".join(f"{s:>{width}}" for s in range(min(s_vals), max(s_vals) + 1)))
    return "\n".join(out)


def _poly_str(p: LaurentPolynomial) -> str:
    return repr(p)


def cmd_compute(args) -> int:
    try:
        params = TangleParams(args.a, args.b, args.c, args.sign)
    except CurveError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    record = _record(params)
    if args.format == "json":
        print(json.dumps(record, indent=2))
    elif args.format == "csv":
        print(_format_csv(record))
    elif args.format == "latex":
        print(_format_latex(record))
    else:
        print(_format_ascii(record))
    return 0 if all(v != "fail" for v in record["checks"].values()) else 1


def cmd_verify(args) -> int:
    try:
        params = TangleParams(args.a, args.b, args.c, args.sign)
    except CurveError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = verify(params)
    p, q, r = params.pretzel_triple()
    print(f"P({p},{q},{r}):")
    for name, outcome in report.checks.items():
        print(f"  {name}: {outcome}")
    return 0 if report.passed else 1


def cmd_sweep(args) -> int:
    if min(args.max_a, args.max_b, args.max_c) < 1:
        print("error: sweep bounds must be at least 1", file=sys.stderr)
        return 2
    if args.sign == "both":
        signs = ["+", "-"]
    else:
        signs = [args.sign]
    census: Dict[str, int] = {}
    failures = []
    total = 0
    for sign in signs:
        for a in range(1, args.max_a + 1):
            for b in range(1, args.max_b + 1):
                for c in range(1, args.max_c + 1):
                    params = TangleParams(a, b, c, sign)
                    report = verify(params)
                    shape = classify(params).shape.value
                    census[shape] = census.get(shape, 0) + 1
                    total += 1
                    status = "pass" if report.passed else "fail"
                    p, q, r = params.pretzel_triple()
                    print(f"P({p},{q},{r}) [{shape}]: {status}")
                    if not report.passed:
                        failures.append((params, report.failures()))
    print(f"checked {total} knots")
    for shape in sorted(census):
        print(f"  {shape}: {census[shape]}")
    if failures:
        for params, names in failures:
            print(f"FAILED {params.pretzel_triple()}: {', '.join(names)}")
        return 1
    print("all checks passed")
    return 0


def cmd_alex(args) -> int:
    try:
        diagram = build_pretzel_diagram(args.p, args.q, args.r)
    except DiagramError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    poly = fox_alexander(diagram)
    det = abs(poly.eval_at_unit(at_minus_one=True))
    print(_poly_str(poly))
    print(f"determinant {det}")
    assert det == pretzel_determinant(args.p, args.q, args.r)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pretzelhfk",
        description=(
            "Knot Floer homology of pretzel knots P(2a,-2b-1,+-(2c+1)). "
            "Delta gradings are relative half-integers, serialized as "
            "delta_times_2."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("compute", help="rank table of one knot")
    pc.add_argument("--a", type=int, required=True)
    pc.add_argument("--b", type=int, required=True)
    pc.add_argument("--c", type=int, required=True)
    pc.add_argument("--sign", choices=["+", "-"], required=True)
    pc.add_argument("--format", choices=["json", "csv", "latex", "ascii"], default="json")
    pc.set_defaults(func=cmd_compute)

    pv = sub.add_parser("verify", help="run all consistency checks for one knot")
    pv.add_argument("--a", type=int, required=True)
    pv.add_argument("--b", type=int, required=True)
    pv.add_argument("--c", type=int, required=True)
    pv.add_argument("--sign", choices=["+", "-"], required=True)
    pv.set_defaults(func=cmd_verify)

    ps = sub.add_parser("sweep", help="verify a whole parameter grid")
    ps.add_argument("--max-a", type=int, required=True)
    ps.add_argument("--max-b", type=int, required=True)
    ps.add_argument("--max-c", type=int, required=True)
    ps.add_argument("--sign", choices=["+", "-", "both"], default="both")
    ps.set_defaults(func=cmd_sweep)

    pa = sub.add_parser("alex", help="Fox-calculus Alexander polynomial oracle")
    pa.add_argument("--p", type=int, required=True)
    pa.add_argument("--q", type=int, required=True)
    pa.add_argument("--r", type=int, required=True)
    pa.set_defaults(func=cmd_alex)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
