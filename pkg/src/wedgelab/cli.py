"""Command-line surface.

    wedgelab gen <kind> --n INT [--seed INT] [--denom INT] [--path P] -o OUT
    wedgelab count <areas|dots|energy> POINTS [--other POINTS] [--json OUT]
    wedgelab lines POINTS [-o OUT] [--oriented] [--projected]
    wedgelab verify <correspondence|gkt|invariants> POINTS [--max-n INT] ...
    wedgelab sumprod [REALS] [--upto INT] [--max-n INT] [--json OUT]
    wedgelab report [POINTS] [--gen KIND --n INT ...] [--json OUT]
                    [--csv OUT] [--figures DIR] [--oriented] [--max-n INT]

Exit codes: 0 success, 1 a verification report was falsified, 2 bad input or
usage. Diagnostic text goes to stderr; results go to stdout or to files.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import incidence, io as wio, report as wreport
from .counting import (
    ORACLE_CAP,
    distinct_areas,
    distinct_areas_bipartite,
    distinct_dot_products,
    energy,
    quadruple_count_naive,
)
from .errors import CapExceededError, InputError, WedgeLabError
from .generators import KINDS, GeneratorSpec, generate
from .geom import (
    PointSet,
    format_scalar,
    max_collinear,
    normalize_rotation,
    wedge,
)
from .lines import build_family, canonical_4d, maps_source_to_target, on_quadric_check, project_family
from .sumproduct import (
    DIO_CAP,
    GRID_WEDGE_CAP,
    cs_certificate,
    grid_wedge_equivalence,
    product_sumset,
    range_set,
)

EXIT_OK = 0
EXIT_FALSIFIED = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wedgelab",
        description="Exact counting of triangle areas, dot products, and the "
        "transformation-line incidences behind them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate a point-set file")
    p_gen.add_argument("kind", choices=KINDS)
    p_gen.add_argument("--n", type=int, help="point count / grid side / circle points")
    p_gen.add_argument("--seed", type=int, help="seed for the random kind")
    p_gen.add_argument("--denom", type=int, help="denominator bound for the random kind")
    p_gen.add_argument("--path", help="input path for the file and product-grid kinds")
    p_gen.add_argument("-o", "--output", required=True, help="output point-set file")

    p_count = sub.add_parser("count", help="print one exact count")
    p_count.add_argument("what", choices=("areas", "dots", "energy"))
    p_count.add_argument("points", help="point-set file")
    p_count.add_argument("--other", help="second point set (bipartite areas)")
    p_count.add_argument("--json", dest="json_path", help="also write a JSON result")

    p_lines = sub.add_parser("lines", help="build and export the line family")
    p_lines.add_argument("points", help="point-set file")
    p_lines.add_argument("-o", "--output", help="output family file (default stdout)")
    p_lines.add_argument("--oriented", action="store_true", help="positively oriented pairs only")
    p_lines.add_argument("--projected", action="store_true", help="export the 3D projection")

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("what", choices=("correspondence", "gkt", "invariants"))
    p_verify.add_argument("points", help="point-set file")
    p_verify.add_argument("--max-n", type=int, default=ORACLE_CAP, help="oracle size cap override")
    p_verify.add_argument("--oriented", action="store_true", help="check the oriented family")
    p_verify.add_argument("--regulus-cap", type=int, default=incidence.REGULUS_ENUMERATION_LIMIT)
    p_verify.add_argument("--json", dest="json_path", help="also write the report as JSON")

    p_sum = sub.add_parser("sumprod", help="sum-product counts over a real set")
    p_sum.add_argument("reals", nargs="?", help="real-set file (one rational per line)")
    p_sum.add_argument("--upto", type=int, help="use the set {1..n} instead of a file")
    p_sum.add_argument("--max-n", type=int, default=None, help="histogram size cap override")
    p_sum.add_argument("--json", dest="json_path", help="also write a JSON result")

    p_report = sub.add_parser("report", help="full pipeline report")
    p_report.add_argument("points", nargs="?", help="point-set file")
    p_report.add_argument("--gen", dest="gen_kind", choices=KINDS, help="generate instead of reading")
    p_report.add_argument("--n", type=int)
    p_report.add_argument("--seed", type=int)
    p_report.add_argument("--denom", type=int)
    p_report.add_argument("--path", help="input path for the file/product-grid generators")
    p_report.add_argument("--oriented", action="store_true")
    p_report.add_argument("--max-n", type=int, default=ORACLE_CAP, help="oracle size cap override")
    p_report.add_argument("--json", dest="json_path", help="write the JSON report here")
    p_report.add_argument("--csv", dest="csv_path", help="append a CSV row here")
    p_report.add_argument("--figures", dest="figures_dir", help="render figures into this directory")
    return parser


def _load_points(path: str) -> PointSet:
    try:
        return wio.read_point_set(path)
    except OSError as exc:
        raise InputError(f"cannot read point set {path!r}: {exc}") from exc


def _load_reals(path: str):
    try:
        return wio.read_real_set(path)
    except OSError as exc:
        raise InputError(f"cannot read real set {path!r}: {exc}") from exc


def _emit_json(payload: dict, path: str | None) -> None:
    text = json.dumps(payload, indent=2) + "\n"
    if path:
        wio.atomic_write_text(path, text)


def _cmd_gen(args) -> int:
    spec = GeneratorSpec(
        kind=args.kind, n=args.n, denom=args.denom, seed=args.seed, path=args.path
    )
    ps = generate(spec)
    wio.write_point_set(ps, args.output)
    print(f"wrote {len(ps)} points to {args.output}", file=sys.stderr)
    return EXIT_OK


def _cmd_count(args) -> int:
    ps = _load_points(args.points)
    payload: dict = {"input": args.points, "n_points": len(ps)}
    if args.what == "areas":
        if args.other:
            qs = _load_points(args.other)
            value = distinct_areas_bipartite(ps, qs)
            payload["other"] = args.other
        else:
            value = distinct_areas(ps)
        payload["distinct_areas"] = value
        print(value)
    elif args.what == "dots":
        value = distinct_dot_products(ps)
        payload["distinct_dots"] = value
        print(value)
    else:
        rep = energy(ps)
        payload.update(
            energy=rep.energy,
            distinct_values=rep.distinct_values,
            total_pairs=rep.total_pairs,
        )
        print(rep.energy)
    _emit_json(payload, args.json_path)
    return EXIT_OK


def _cmd_lines(args) -> int:
    ps = _load_points(args.points)
    rotated, record = normalize_rotation(ps)
    family = build_family(rotated, oriented=args.oriented)
    if args.projected:
        family = project_family(family)
    text = wio.render_line_family(family) if family.lines else ""
    if args.output:
        wio.atomic_write_text(args.output, text)
        print(
            f"wrote {len(family)} lines (rotation c={format_scalar(record.c)}, "
            f"s={format_scalar(record.s)}) to {args.output}",
            file=sys.stderr,
        )
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _verify_correspondence(ps: PointSet, args) -> tuple[bool, dict]:
    rep = incidence.correspondence_check(ps, cap=args.max_n)
    payload = {
        "check": "correspondence",
        "quadruples_restricted": rep.quadruple_count,
        "intersecting_oriented_pairs": rep.line_pair_count,
        "rotation": {"c": format_scalar(rep.rotation.c), "s": format_scalar(rep.rotation.s)},
        "ok": rep.ok,
    }
    return rep.ok, payload


def _verify_gkt(ps: PointSet, args) -> tuple[bool, dict]:
    rotated, _ = normalize_rotation(ps)
    family4 = build_family(rotated, oriented=args.oriented)
    family3 = project_family(family4)
    rep = incidence.gkt_condition_report(
        family3, family4=family4, regulus_line_cap=args.regulus_cap
    )
    payload = {
        "check": "gkt-conditions",
        "n_points": rep.n_points,
        "line_count": rep.line_count,
        "intersections_3d": rep.intersections_3d,
        "intersections_4d": rep.intersections_4d,
        "max_concurrency": rep.max_concurrency,
        "max_coplanar": rep.max_coplanar,
        "regulus_max": rep.regulus.count if rep.regulus else None,
        "regulus_exhaustive": rep.regulus.exhaustive if rep.regulus else None,
        "concurrency_over_N": format_scalar(rep.concurrency_ratio),
        "coplanar_over_2N": format_scalar(rep.coplanar_ratio),
        "intersections_over_N3_logN": rep.intersections_ratio,
        "violations": list(rep.violations),
        "ok": rep.ok,
    }
    return rep.ok, payload


def _verify_invariants(ps: PointSet, args) -> tuple[bool, dict]:
    """Identity bundle: algebraic identities on the set, rotation
    invariance, energy versus the quartic oracle, line identities, and the
    3D/4D intersection comparison."""
    from .geom import dot as _dot, perp as _perp

    checks: dict[str, bool] = {}
    pts = ps.points
    checks["wedge_antisymmetry"] = all(
        wedge(u, v) == -wedge(v, u) for u in pts for v in pts
    )
    checks["dot_equals_wedge_perp"] = all(
        _dot(u, v) == wedge(u, _perp(v)) for u in pts for v in pts
    )
    rotated, _ = normalize_rotation(ps)
    checks["rotation_preserves_counts"] = (
        distinct_areas(ps) == distinct_areas(rotated)
        and distinct_dot_products(ps) == distinct_dot_products(rotated)
        and energy(ps) == energy(rotated)
        and max_collinear(ps) == max_collinear(rotated)
    )
    if len(ps) <= args.max_n:
        checks["energy_equals_quadruple_oracle"] = (
            energy(ps).energy == quadruple_count_naive(ps, restricted=False, cap=args.max_n)
        )
    family4 = build_family(rotated, oriented=False)
    checks["line_identities"] = all(
        on_quadric_check(line).ok and maps_source_to_target(line)
        for line in family4
    )
    # index pairs that are scalar multiples of each other legitimately share
    # a line, so compare against proportionality classes, not raw pair count
    def _pair_class(line):
        s, t = line.source, line.target
        lead = s.x if s.x != 0 else s.y
        return (s.x / lead, s.y / lead, t.x / lead, t.y / lead)

    classes = {_pair_class(line) for line in family4}
    distinct_4d = {canonical_4d(line) for line in family4}
    checks["distinct_lines"] = len(distinct_4d) == len(classes)
    family3 = project_family(family4)
    checks["projection_injective"] = len(
        {(line.base, line.dir) for line in family3}
    ) == len(distinct_4d)
    if len(family4) <= incidence.INTERSECTION_CAP:
        comparison = incidence.compare_projection_counts(family4, family3)
        checks["projection_preserves_intersections"] = comparison.ok
    ok = all(checks.values())
    payload = {"check": "invariants", "results": checks, "ok": ok}
    return ok, payload


def _cmd_verify(args) -> int:
    ps = _load_points(args.points)
    if args.what == "correspondence":
        ok, payload = _verify_correspondence(ps, args)
    elif args.what == "gkt":
        ok, payload = _verify_gkt(ps, args)
    else:
        ok, payload = _verify_invariants(ps, args)
    for key, value in payload.items():
        if key != "check":
            print(f"{key}: {value}")
    _emit_json(payload, args.json_path)
    if not ok:
        print("FALSIFIED", file=sys.stderr)
        return EXIT_FALSIFIED
    return EXIT_OK


def _cmd_sumprod(args) -> int:
    if (args.reals is None) == (args.upto is None):
        raise InputError("sumprod needs exactly one of a real-set file or --upto")
    a = range_set(args.upto) if args.upto else _load_reals(args.reals)
    cap = args.max_n if args.max_n is not None else DIO_CAP
    cert = cs_certificate(a, cap=cap)
    plus = product_sumset(a, "+")
    wedge_rep = None
    if len(a) <= GRID_WEDGE_CAP:
        wedge_rep = grid_wedge_equivalence(a)
    payload = {
        "set_size": cert.set_size,
        "product_sumset_plus": plus,
        "product_sumset_minus": cert.difference_set_size,
        "dio_solutions": cert.dio_count,
        "cs_lhs": cert.lhs,
        "cs_rhs": cert.rhs,
        "cs_ok": cert.ok,
        "dio_over_N6_logN": cert.dio_ratio,
        "grid_wedge_equivalence": wedge_rep.ok if wedge_rep is not None else None,
    }
    for key, value in payload.items():
        print(f"{key}: {value}")
    _emit_json(payload, args.json_path)
    falsified = (not cert.ok) or (wedge_rep is not None and not wedge_rep.ok)
    return EXIT_FALSIFIED if falsified else EXIT_OK


def _cmd_report(args) -> int:
    if (args.points is None) == (args.gen_kind is None):
        raise InputError("report needs exactly one of a point-set file or --gen")
    if args.gen_kind:
        spec = GeneratorSpec(
            kind=args.gen_kind, n=args.n, denom=args.denom, seed=args.seed, path=args.path
        )
        ps = generate(spec)
        generator_tag = spec.tag()
        seed = args.seed
    else:
        ps = _load_points(args.points)
        generator_tag = ps.provenance or f"file({args.points})"
        seed = args.seed
    rep = wreport.build_report(
        ps, oriented=args.oriented, oracle_cap=args.max_n,
        generator=generator_tag, seed=seed,
    )
    text = wreport.render_report_json(rep)
    if args.json_path:
        wio.atomic_write_text(args.json_path, text)
    if args.csv_path:
        wreport.append_report_csv(rep, args.csv_path)
    if args.figures_dir:
        from . import plotting
        from .counting import wedge_histogram

        outdir = Path(args.figures_dir)
        outdir.mkdir(parents=True, exist_ok=True)
        stem = "report" if args.points is None else Path(args.points).stem
        if args.gen_kind:
            stem = f"{args.gen_kind}{args.n or ''}"
        written = [
            plotting.save_histogram_figure(
                wedge_histogram(ps), outdir / f"{stem}_histogram.png", title=generator_tag
            ),
            plotting.save_ratio_figure(rep, outdir / f"{stem}_ratios.png"),
        ]
        if args.csv_path and Path(args.csv_path).exists():
            written.append(
                plotting.save_trend_figure(args.csv_path, outdir / "trend.png")
            )
        print("figures: " + ", ".join(str(p) for p in written), file=sys.stderr)
    if not args.json_path:
        sys.stdout.write(text)
    return EXIT_OK


def run_subcommand(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    handlers = {
        "gen": _cmd_gen,
        "count": _cmd_count,
        "lines": _cmd_lines,
        "verify": _cmd_verify,
        "sumprod": _cmd_sumprod,
        "report": _cmd_report,
    }
    try:
        return handlers[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceededError as exc:
        print(f"error: {exc} (raise --max-n to override where supported)", file=sys.stderr)
        return EXIT_USAGE
    except WedgeLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run_subcommand(sys.argv[1:]))


if __name__ == "__main__":
    main()
