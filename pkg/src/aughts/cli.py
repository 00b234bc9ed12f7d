"""Command-line front end.

Subcommands: verify, group, orbit, trace, census, render.
Exit codes: 0 success, 1 verification failure, 2 usage, 3 I/O, 4 resource.
"""

from __future__ import annotations

import argparse
import json
import sys

from aughts import atlas, census, orbits, svg, verify
from aughts.errors import ResourceLimitError

SCHEMA_VERSION = 1


class UsageError(ValueError):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aughts",
        description=(
            "Exact-integer toolkit for the group of alternating involutions "
            "and its twisted-aught lattice orbits."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--seed-order",
            choices=("k1-first", "k2-first"),
            default="k1-first",
            help="traversal direction of the 2D orbit cycle",
        )
        p.add_argument("--out", help="output path (default: stdout)")
        p.add_argument("--format", choices=("json", "svg"), default=None)

    p_verify = sub.add_parser("verify", help="run the identity/oracle suites")
    p_verify.add_argument("--max-n", type=int, default=3, dest="max_n")
    add_common(p_verify)

    p_group = sub.add_parser("group", help="export the full group catalog")
    p_group.add_argument("--dim", type=int, required=True)
    add_common(p_group)

    p_orbit = sub.add_parser("orbit", help="orbit of a lattice point")
    p_orbit.add_argument("point", help="comma-separated integer coordinates")
    add_common(p_orbit)

    p_trace = sub.add_parser("trace", help="apply a word of operator indices")
    p_trace.add_argument("point", help="comma-separated integer coordinates")
    p_trace.add_argument("--word", required=True, help="comma-separated indices")
    add_common(p_trace)

    p_census = sub.add_parser("census", help="orbit/point census over a region")
    _add_region_flags(p_census)
    p_census.add_argument("--mod", type=int, default=None)
    p_census.add_argument("--diametral", action="store_true")
    add_common(p_census)

    p_render = sub.add_parser("render", help="deterministic SVG renders")
    _add_region_flags(p_render)
    p_render.add_argument("--mod", type=int, default=None)
    p_render.add_argument("--diametral", action="store_true")
    p_render.add_argument("--projection", action="store_true")
    p_render.add_argument("--point", help="single-orbit seed, comma-separated")
    p_render.add_argument("--palette", help="comma-separated hex colors")
    p_render.add_argument("--scale", type=int, default=10)
    add_common(p_render)

    return parser


def _add_region_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--square", type=int, default=None, metavar="M")
    p.add_argument("--sym-square", type=int, default=None, metavar="R")
    p.add_argument("--hexagon", type=int, default=None, metavar="M")
    p.add_argument("--disk", type=int, default=None, metavar="R")
    p.add_argument("--rect", default=None, metavar="X0,X1,Y0,Y1")


def _parse_point(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(v.strip()) for v in text.split(","))
    except ValueError as exc:
        raise UsageError(f"malformed coordinates: {text!r}") from exc


def _parse_word(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(v.strip()) for v in text.split(",") if v.strip())
    except ValueError as exc:
        raise UsageError(f"malformed word: {text!r}") from exc


def _region_from_args(args) -> census.Region:
    chosen = [
        name
        for name, value in (
            ("square", args.square),
            ("sym-square", args.sym_square),
            ("hexagon", args.hexagon),
            ("disk", args.disk),
            ("rect", args.rect),
        )
        if value is not None
    ]
    if len(chosen) != 1:
        raise UsageError("exactly one region flag is required")
    try:
        if args.square is not None:
            return census.Region.square(args.square)
        if args.sym_square is not None:
            return census.Region.sym_square(args.sym_square)
        if args.hexagon is not None:
            return census.Region.hexagon(args.hexagon)
        if args.disk is not None:
            return census.Region.disk(args.disk)
        parts = _parse_point(args.rect)
        if len(parts) != 4:
            raise UsageError("--rect needs four integers X0,X1,Y0,Y1")
        return census.Region.rect(*parts)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _emit_json(payload: dict, out_path: str | None) -> None:
    _emit(json.dumps(payload, indent=2), out_path)


def cmd_verify(args) -> int:
    if not 1 <= args.max_n <= 6:
        raise UsageError(f"--max-n must be in 1..6, got {args.max_n}")
    suites = verify.run_all(args.max_n)
    total = 0
    failed = False
    for suite in suites:
        total += suite.checks
        status = "PASS" if suite.passed else "FAIL"
        print(f"[{status}] {suite.name}: {suite.checks} checks")
        for note in suite.notes:
            print(f"       {note}")
        if not suite.passed:
            failed = True
            print(f"       first counterexample: {suite.counterexample}")
    print(f"{'some suites FAILED' if failed else 'all suites passed'} ({total} checks)")
    return 1 if failed else 0


def cmd_group(args) -> int:
    if not 1 <= args.dim <= atlas.ENUMERATION_MAX_N:
        raise UsageError(f"--dim must be in 1..{atlas.ENUMERATION_MAX_N}")
    payload = atlas.catalog_json(atlas.catalog(args.dim))
    _emit_json(payload, args.out)
    return 0


def cmd_orbit(args) -> int:
    point = _parse_point(args.point)
    if not 2 <= len(point) <= 6:
        raise UsageError(f"orbit needs dimension 2..6, got {len(point)}")
    first = 1 if args.seed_order == "k1-first" else 2
    if len(point) == 2:
        record = orbits.orbit_record(orbits.orbit2d(point, first))
        record = {"schema_version": SCHEMA_VERSION, "kind": "orbit", **record}
    else:
        graph = orbits.reach_graph(point)
        record = {
            "schema_version": SCHEMA_VERSION,
            "kind": "reach-graph",
            "seed": list(point),
            "node_count": len(graph.nodes),
            "edge_count": len(graph.edges),
        }
    _emit_json(record, args.out)
    return 0


def cmd_trace(args) -> int:
    point = _parse_point(args.point)
    word = _parse_word(args.word)
    n = len(point)
    if any(not 1 <= j <= n for j in word):
        raise UsageError(f"word indices must be in 1..{n}")
    traj = orbits.run_word(point, word)
    record = {
        "schema_version": SCHEMA_VERSION,
        "kind": "trajectory",
        **orbits.trajectory_record(traj),
    }
    _emit_json(record, args.out)
    return 0


def cmd_census(args) -> int:
    region = _region_from_args(args)
    if args.diametral == (args.mod is not None):
        raise UsageError("census needs exactly one of --mod or --diametral")
    if args.mod is not None:
        if region.kind != "square_0M":
            raise UsageError("modular census is defined over --square M")
        if args.mod < 2:
            raise UsageError("--mod must be >= 2")
        m = region.params[0]
        report = census.modular_census(m, args.mod)
        headline = ", ".join(
            f"{r}: {c} ({c / m**2:.6g} M^2)"
            for r, c in sorted(report.residue_counts.items())
            if c
        )
        print(f"orbits by length mod {args.mod}: {headline}", file=sys.stderr)
    else:
        try:
            report = census.diametral_report(region)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        print(
            f"diametral fraction: {report.diametral_fraction:.12g}", file=sys.stderr
        )
    _emit_json(report.to_json_dict(), args.out)
    return 0


def cmd_render(args) -> int:
    modes = [
        args.mod is not None,
        args.diametral,
        args.projection,
        args.point is not None,
    ]
    if sum(modes) != 1:
        raise UsageError(
            "render needs exactly one of --mod, --diametral, --projection, --point"
        )
    palette = svg.DEFAULT_PALETTE
    if args.palette:
        palette = tuple(c.strip() for c in args.palette.split(",") if c.strip())
    first = 1 if args.seed_order == "k1-first" else 2
    if args.point is not None:
        seed = _parse_point(args.point)
        if len(seed) != 2:
            raise UsageError("--point must be two-dimensional for rendering")
        region = census.Region.rect(0, 0, 0, 0)  # unused by single_orbit
        mode, modulus = "single_orbit", None
    else:
        region = _region_from_args(args)
        if args.mod is not None:
            mode, modulus = "mod_color", args.mod
        elif args.diametral:
            mode, modulus = "diametral", None
        else:
            mode, modulus = "projection", None
        seed = None
    try:
        spec = svg.RenderSpec(
            region=region,
            mode=mode,
            modulus=modulus,
            palette=palette,
            scale=args.scale,
            seed=seed,
            first_generator=first,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _emit(svg.render_svg(spec), args.out)
    return 0


_COMMANDS = {
    "verify": cmd_verify,
    "group": cmd_group,
    "orbit": cmd_orbit,
    "trace": cmd_trace,
    "census": cmd_census,
    "render": cmd_render,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        wanted = getattr(args, "format", None)
        natural = "svg" if args.command == "render" else "json"
        if wanted is not None and wanted != natural:
            raise UsageError(f"{args.command} produces {natural}, not {wanted}")
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 4
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
