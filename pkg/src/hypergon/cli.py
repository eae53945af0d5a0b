"""Command-line front end.

Exit codes: 0 success, 1 discrepancy or failed check, 2 unreadable or
malformed input, 3 invalid polygon or parameters, 4 unwritable output.
Seeds fall back to the ``HYPERGON_SEED`` environment variable, then 0.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .core import hyperbolic_distance, is_ideal
from .corpus import random_corpus, random_isometry
from .errors import HypergonError
from .formats import ParseError, PolygonFile, dumps, read_polygon
from .isoper import IsoperimetricProblem, OptimizerConfig, area_bound, optimize
from .oracle import QuadratureConfig, arclength_numeric, line_integral_area, montecarlo_area
from .polygon import (
    HyperbolicPolygon,
    area_computational,
    area_report,
    classify_side,
    is_simple,
    perimeter,
    turning_residual,
    validate,
)
from .svg import render_svg

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_INVALID, EXIT_OUTPUT = 0, 1, 2, 3, 4


def _seed(arg):
    if arg is not None:
        return arg
    env = os.environ.get("HYPERGON_SEED")
    return int(env) if env else 0


def _header(command: str) -> dict:
    return {"tool": "hypergon", "version": __version__, "command": command}


def _load(path, auto_orient_flag):
    """Read and validate a polygon file; returns (file, polygon) or an exit code."""
    try:
        pf = read_polygon(path)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    auto = pf.auto_orient if auto_orient_flag is None else auto_orient_flag
    try:
        poly = validate(pf.vertices, auto_orient=auto, allow_ideal=pf.allow_ideal)
    except HypergonError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    return pf, poly


def _side_rows(p: HyperbolicPolygon) -> list:
    rows = []
    for k, s in enumerate(p.sides):
        arc = {"kind": s.arc.kind.value}
        if not s.arc.is_diameter:
            arc.update(center=s.arc.center, radius=s.arc.radius)
        rows.append({
            "index": k + 1,
            "start": s.start,
            "end": s.end,
            "a_modulus": None if s.a_coeff is None else abs(s.a_coeff),
            "classification": classify_side(p, k).kind.value,
            "arc_angle": s.arc_angle,
            "length": s.length,
            "arc": arc,
        })
    return rows


def _oracle_rows(p: HyperbolicPolygon, closed_form: float, samples: int, seed: int) -> tuple:
    rows, ok = {}, True
    if p.has_ideal_vertex:
        return {"skipped": "oracles need every vertex strictly inside the disk"}, True
    li = line_integral_area(p)
    li_ok = abs(li.area - closed_form) <= 1e-7 and li.real_residual <= 1e-7
    rows["line_integral"] = {"area": li.area, "real_residual": li.real_residual,
                             "discrepancy": abs(li.area - closed_form), "pass": li_ok}
    worst = max(abs(arclength_numeric(s) - s.length) for s in p.sides)
    rows["arclength"] = {"max_discrepancy": worst, "pass": worst <= 1e-7}
    ok = li_ok and worst <= 1e-7
    if is_simple(p):
        mc = montecarlo_area(p, samples, seed)
        mc_ok = abs(mc.estimate - closed_form) <= 4 * mc.std_error or mc.std_error == 0.0 == mc.estimate - closed_form
        rows["monte_carlo"] = {"estimate": mc.estimate, "std_error": mc.std_error, "samples": mc.samples,
                               "seed": mc.seed, "generator": mc.generator, "pass": mc_ok}
        ok = ok and mc_ok
    return rows, ok


def cmd_area(args) -> int:
    loaded = _load(args.input, args.auto_orient)
    if isinstance(loaded, int):
        return loaded
    pf, poly = loaded
    seed = _seed(args.seed)
    rep = area_report(poly, tol=args.tol)
    out = _header("area")
    out["input"] = pf.to_dict()
    out["orientation"] = "reversed" if poly.reoriented else "as_given"
    out["simple"] = is_simple(poly)
    out["sides"] = _side_rows(poly)
    out["area"] = {
        "computational": rep.a_computational,
        "geometric": rep.a_geometric,
        "classical": rep.a_classical,
        "identity": rep.identity,
        "winding": rep.a_winding,
    }
    out["perimeter"] = rep.perimeter
    out["identity_residual"] = rep.identity_residual
    out["max_pairwise_discrepancy"] = rep.max_pairwise_discrepancy
    out["tol"] = args.tol
    out["skipped"] = rep.skipped
    ok = rep.agrees
    if args.verify:
        out["oracles"], oracle_ok = _oracle_rows(poly, rep.a_computational, args.samples, seed)
        ok = ok and oracle_ok
    out["seed"] = seed
    out["status"] = "ok" if ok else "discrepancy"
    print(dumps(out))
    return EXIT_OK if ok else EXIT_FAIL


def _write(path, text) -> int:
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        print(f"error: cannot write {path}: {exc}", file=sys.stderr)
        return EXIT_OUTPUT
    return EXIT_OK


def cmd_render(args) -> int:
    loaded = _load(args.input, args.auto_orient)
    if isinstance(loaded, int):
        return loaded
    _, poly = loaded
    return _write(args.output, render_svg(poly, title=Path(args.input).name))


def cmd_isoper(args) -> int:
    seed = _seed(args.seed)
    try:
        problem = IsoperimetricProblem(args.n, args.perimeter)
        cfg = OptimizerConfig(starts=args.starts, perimeter_tol=args.perimeter_tol, gap=args.gap, seed=seed)
        res = optimize(problem, cfg)
    except HypergonError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    out = _header("isoper")
    out.update({
        "n": args.n,
        "perimeter": args.perimeter,
        "bound": res.bound_value,
        "regular_area": res.regular_area,
        "optimizer": {
            "area": res.area,
            "perimeter_residual": res.perimeter_residual,
            "iterations": res.iterations,
            "start_index": res.start_index,
            "is_simple": res.is_simple,
            "vertices": [[z.real, z.imag] for z in res.vertices],
            "trace": [list(t) for t in res.trace],
        },
        "gap": res.gap,
        "config": {"starts": cfg.starts, "perimeter_tol": cfg.perimeter_tol, "gap": cfg.gap},
        "seed": seed,
    })
    ok = res.gap <= cfg.gap
    out["status"] = "ok" if ok else "gap_exceeded"
    print(dumps(out))
    if args.svg:
        poly = validate(res.vertices, check_orientation=False)
        code = _write(args.svg, render_svg(poly, title=f"isoperimetric n={args.n} P={args.perimeter}"))
        if code:
            return code
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------------------
# verify suite

SUITES = ("cross_formula", "isometry", "turning", "bound")


def _check_polygon(poly: HyperbolicPolygon, rng, isometries: int) -> dict:
    """Per-suite ``(passed, worst value)``; None when the suite does not apply."""
    res = {}
    rep = area_report(poly, tol=1e-9)
    res["cross_formula"] = (rep.agrees, rep.max_pairwise_discrepancy)
    A, P = rep.a_computational, rep.perimeter
    worst = 0.0
    for _ in range(isometries):
        img = poly.transformed(random_isometry(rng))
        worst = max(worst, abs(area_computational(img) - A))
        if math.isfinite(P):
            worst = max(worst, abs(perimeter(img) - P))
    res["isometry"] = (worst <= 1e-10, worst)
    if is_simple(poly):
        t = turning_residual(poly)
        res["turning"] = (t <= 1e-10, t)
    else:
        res["turning"] = None
    if math.isfinite(P) and P / (2 * poly.n) <= 350:
        excess = A - area_bound(poly.n, P)
        res["bound"] = (excess <= 1e-9, excess)
    else:
        res["bound"] = None
    return res


def cmd_verify_suite(args) -> int:
    seed = _seed(args.seed)
    rng = np.random.default_rng(seed)
    items, failures = [], []
    if args.corpus:
        for path in sorted(Path(args.corpus).glob("*.json")):
            try:
                pf = read_polygon(path)
                poly = validate(pf.vertices, auto_orient=pf.auto_orient, allow_ideal=pf.allow_ideal)
            except HypergonError as exc:
                failures.append({"item": path.name, "suite": "validation", "reason": f"{type(exc).__name__}: {exc}"})
                continue
            items.append((path.name, poly))
    if args.random:
        items += [(f"random[{k}]", p) for k, p in enumerate(random_corpus(seed, args.random))]
    counts = {s: {"pass": 0, "fail": 0, "skipped": 0} for s in SUITES}
    worst = {s: 0.0 for s in SUITES}
    reversed_items = []
    for name, poly in items:
        if poly.reoriented:
            reversed_items.append(name)
        for suite, outcome in _check_polygon(poly, rng, args.isometries).items():
            if outcome is None:
                counts[suite]["skipped"] += 1
                continue
            passed, value = outcome
            worst[suite] = max(worst[suite], value)
            counts[suite]["pass" if passed else "fail"] += 1
            if not passed:
                failures.append({"item": name, "suite": suite, "value": value})
    out = _header("verify")
    out.update({
        "polygons": len(items),
        "validation_failures": sum(f["suite"] == "validation" for f in failures),
        "suites": counts,
        "worst": worst,
        "reoriented": reversed_items,
        "failures": failures,
        "seed": seed,
    })
    ok = not failures
    out["status"] = "ok" if ok else "failed"
    print(dumps(out))
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hypergon", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"hypergon {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    orient = argparse.ArgumentParser(add_help=False)
    orient.add_argument("--auto-orient", action=argparse.BooleanOptionalAction, default=None,
                        help="override the file's auto_orient flag")

    p = sub.add_parser("area", parents=[orient], help="area and perimeter report for a polygon file")
    p.add_argument("input")
    p.add_argument("--verify", action="store_true", help="add quadrature and Monte Carlo oracle rows")
    p.add_argument("--tol", type=float, default=1e-8, help="allowed pairwise formula discrepancy")
    p.add_argument("--samples", type=int, default=200_000, help="Monte Carlo samples for --verify")
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_area)

    p = sub.add_parser("render", parents=[orient], help="draw a polygon file as SVG")
    p.add_argument("input")
    p.add_argument("output")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("isoper", help="maximise area at fixed perimeter")
    p.add_argument("n", type=int)
    p.add_argument("perimeter", type=float)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--starts", type=int, default=8)
    p.add_argument("--perimeter-tol", type=float, default=1e-8)
    p.add_argument("--gap", type=float, default=1e-4)
    p.add_argument("--svg", default=None, help="also render the optimised polygon")
    p.set_defaults(func=cmd_isoper)

    p = sub.add_parser("verify", help="run the property suites over a corpus")
    p.add_argument("corpus", nargs="?", default=None, help="directory of polygon files")
    p.add_argument("--random", type=int, default=0, help="number of random polygons to add")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--isometries", type=int, default=5, help="random isometries per polygon")
    p.set_defaults(func=cmd_verify_suite)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
