"""Command-line interface: ``distlab <gen|count|dual|detect|experiment|solve> ...``.

Exit codes: 0 success, 1 runtime failure or invariant violation, 2 usage error.
"""
from __future__ import annotations

import argparse
import logging
import re
import sys

from . import configurations as cfg
from .duality import correspondence_violations
from .experiment import FORMULAS, QUANTITIES, run_count, run_experiment
from .kernel import GeometryError, format_rational
from .scene import dumps_scene, read_scene
from .tangency import apollonius, common_tangent_lines, tangent_circles_to_three_lines

log = logging.getLogger("distlab")


def _kebab(name: str) -> str:
    # ParallelPlanes3D -> parallel-planes-3d
    return re.sub(r"(?<=[a-z])(?=[A-Z0-9])", "-", name).lower()


GENERATOR_NAMES = {_kebab(n): n for n in cfg.GENERATORS}

DETECT_KINDS = {
    "collinear": cfg.COLLINEAR,
    "cone-planes": cfg.CONE_PLANES,
    "cylinder-planes": cfg.CYLINDER_PLANES,
    "cone-lines": cfg.CONE_LINES,
    "cylinder-lines": cfg.CYLINDER_LINES,
    "hyperboloid-lines": cfg.HYPERBOLOID_LINES,
    "collinear-centers": cfg.COLLINEAR_SPHERE_CENTERS,
}


class UsageError(Exception):
    pass


def _params(items) -> dict[str, int]:
    out = {}
    for item in items or []:
        key, sep, value = item.partition("=")
        if not sep:
            raise UsageError(f"expected k=v, got {item!r}")
        try:
            out[key] = int(value)
        except ValueError:
            raise UsageError(f"parameter {key} must be an integer") from None
    return out


def _sweep(items) -> dict[str, list[int]]:
    out = {}
    for item in items or []:
        key, sep, value = item.partition("=")
        if not sep:
            raise UsageError(f"expected axis=v1,v2,..., got {item!r}")
        try:
            out[key] = [int(v) for v in value.split(",") if v]
        except ValueError:
            raise UsageError(f"sweep values for {key} must be integers") from None
    return out


def _load(path):
    scene, merged = read_scene(path)
    for kind, n in merged.items():
        print(f"note: merged {n} duplicate {kind}", file=sys.stderr)
    return scene


def cmd_gen(args) -> int:
    if args.name not in GENERATOR_NAMES:
        raise UsageError(f"unknown generator {args.name!r}; choose from {', '.join(GENERATOR_NAMES)}")
    scene = cfg.generate(cfg.GeneratorSpec(GENERATOR_NAMES[args.name], _params(args.param), args.seed))
    text = dumps_scene(scene)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_count(args) -> int:
    if args.quantity not in QUANTITIES:
        raise UsageError(f"unknown quantity {args.quantity!r}; choose from {', '.join(QUANTITIES)}")
    row = run_count(_load(args.input), args.quantity, args.exclude_zero)
    print(row.value)
    log.info("%s = %d in %.1f ms", row.quantity, row.value, row.wall_ms)
    return 0


def cmd_dual(args) -> int:
    if not args.check:
        raise UsageError("dual currently supports only --check")
    out = correspondence_violations(_load(args.input))
    for family, n in out.items():
        print(f"{family}: {n} violations")
    total = sum(out.values())
    print(f"{total} violations")
    return 1 if total else 0


def _print_report(rep) -> None:
    print(f"kind: {rep.kind}")
    axis = rep.axis
    if hasattr(axis, "u"):
        print("axis: u=({}) v=({})".format(", ".join(map(format_rational, axis.u)),
                                          ", ".join(map(format_rational, axis.v))))
    elif axis is not None:
        print(f"axis: {axis.a}*x + {axis.b}*y + {axis.c} = 0")
    for name, idx in rep.members.items():
        print(f"{name}: {' '.join(map(str, idx))}")
    if rep.invariant:
        print("invariant: " + " ".join(map(format_rational, rep.invariant)))


def cmd_detect(args) -> int:
    if args.kind not in DETECT_KINDS:
        raise UsageError(f"unknown kind {args.kind!r}; choose from {', '.join(DETECT_KINDS)}")
    kind = DETECT_KINDS[args.kind]
    scene = _load(args.input)
    if kind == cfg.COLLINEAR:
        rep = cfg.detect_collinear(scene.points2 or scene.points3, args.s)
    elif kind == cfg.COLLINEAR_SPHERE_CENTERS:
        rep = cfg.detect_collinear_sphere_centers(scene.spheres3, args.s)
    elif kind in (cfg.CONE_PLANES, cfg.CYLINDER_PLANES):
        rep = cfg.detect_plane_cone_cylinder(scene.points3, scene.planes3, args.s, args.t, kind)
    else:
        rep = cfg.detect_line_cone_cylinder_hyperboloid(scene.points3, scene.lines3, args.s, args.t, kind)
    if rep is None:
        print("absent")
    else:
        _print_report(rep)
    return 0


def cmd_experiment(args) -> int:
    if args.generator not in GENERATOR_NAMES:
        raise UsageError(f"unknown generator {args.generator!r}")
    if args.formula not in FORMULAS:
        raise UsageError(f"unknown formula {args.formula!r}; choose from {', '.join(FORMULAS)}")
    if args.quantity is not None and args.quantity not in QUANTITIES:
        raise UsageError(f"unknown quantity {args.quantity!r}")
    sweep = _sweep(args.sweep)
    if not sweep:
        raise UsageError("at least one --sweep is required")
    report = run_experiment(GENERATOR_NAMES[args.generator], sweep, args.formula, args.quantity,
                            _params(args.param), args.seed, args.exclude_zero, args.workers)
    if args.output:
        report.write(args.output)
    else:
        sys.stdout.write(report.to_csv())
    for axis, (slope, err) in report.fitted_exponents.items():
        print(f"exponent[{axis}] = {slope:.4f} +- {err:.4f}", file=sys.stderr)
    return 0


def cmd_solve(args) -> int:
    scene = _load(args.input)
    if args.problem == "apollonius":
        if len(scene.circles2) < 3:
            raise GeometryError("apollonius needs three circles")
        sols = apollonius(*scene.circles2[:3])
        print(f"count: {len(sols)}")
        for c in sols:
            print(f"circle center=({c.cx:.12g}, {c.cy:.12g}) r={c.r:.12g} residual={c.residual:.3g}")
    elif args.problem == "tangent-lines":
        if len(scene.circles2) < 2:
            raise GeometryError("tangent-lines needs two circles")
        count, lines = common_tangent_lines(*scene.circles2[:2])
        print(f"count: {count}")
        for l in lines:
            print(f"line {l.a:.12g}*x + {l.b:.12g}*y + {l.c:.12g} = 0 residual={l.residual:.3g}")
    else:
        if len(scene.lines2) < 3:
            raise GeometryError("tri-lines needs three lines")
        count, circles = tangent_circles_to_three_lines(*scene.lines2[:3])
        print(f"count: {count}")
        for c in circles:
            print(f"circle center=({c.cx:.12g}, {c.cy:.12g}) r={c.r:.12g} residual={c.residual:.3g}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="distlab", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a construction scene")
    g.add_argument("name", help=", ".join(GENERATOR_NAMES))
    g.add_argument("--param", action="append", metavar="K=V")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("count", help="exact count of a quantity")
    c.add_argument("quantity", help=", ".join(QUANTITIES))
    c.add_argument("-i", "--input", required=True)
    c.add_argument("--exclude-zero", action="store_true")
    c.set_defaults(func=cmd_count)

    d = sub.add_parser("dual", help="primal tangency vs dual incidence")
    d.add_argument("--check", action="store_true")
    d.add_argument("-i", "--input", required=True)
    d.set_defaults(func=cmd_dual)

    t = sub.add_parser("detect", help="degenerate configuration detectors")
    t.add_argument("kind", help=", ".join(DETECT_KINDS))
    t.add_argument("-i", "--input", required=True)
    t.add_argument("--s", type=int, default=3)
    t.add_argument("--t", type=int, default=3)
    t.set_defaults(func=cmd_detect)

    e = sub.add_parser("experiment", help="sweep a generator and fit exponents")
    e.add_argument("--generator", required=True)
    e.add_argument("--sweep", action="append", metavar="AXIS=V1,V2,...")
    e.add_argument("--formula", required=True)
    e.add_argument("--quantity")
    e.add_argument("--param", action="append", metavar="K=V")
    e.add_argument("--seed", type=int, default=0)
    e.add_argument("--workers", type=int, default=1)
    e.add_argument("--exclude-zero", action="store_true")
    e.add_argument("-o", "--output")
    e.set_defaults(func=cmd_experiment)

    s = sub.add_parser("solve", help="numeric tangent-object solvers")
    s.add_argument("problem", choices=["apollonius", "tangent-lines", "tri-lines"])
    s.add_argument("-i", "--input", required=True)
    s.set_defaults(func=cmd_solve)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"distlab: error: {exc}", file=sys.stderr)
        return 2
    except (GeometryError, OSError, KeyError, RuntimeError, AssertionError, ValueError) as exc:
        print(f"distlab: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
