"""Counting dispatch, size sweeps, bound formulas and log-log exponent fits."""
from __future__ import annotations

import csv
import io
import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Callable, Sequence

import numpy as np
from scipy import stats

from . import census, tangency
from .configurations import GeneratorSpec, generate
from .kernel import GeometryError
from .scene import Scene


class MissingFamilyError(GeometryError):
    """The scene lacks an object family the requested quantity needs."""


def _need(scene: Scene, quantity: str, *families: str) -> None:
    missing = [f for f in families if not getattr(scene, f)]
    if missing:
        raise MissingFamilyError(f"{quantity} needs nonempty {', '.join(missing)}")


def _points(scene: Scene):
    return scene.points2 or scene.points3


QUANTITIES: dict[str, tuple[tuple[str, ...], Callable]] = {
    "distinctPL": (("points2", "lines2"),
                   lambda s, z: census.distinct_point_line_distances(s.points2, s.lines2, z).size),
    "spannedPL": (("points2",),
                  lambda s, z: census.spanned_distance_census(s.points2, z).size),
    "spannedLines": (("points2",), lambda s, z: len(census.spanned_lines(s.points2))),
    "incidences": (("points2", "lines2"), lambda s, z: census.count_incidences(s.points2, s.lines2)),
    "maxCollinear": ((), lambda s, z: census.max_collinear(_points(s))),
    "distinctPointPlane": (("points3", "planes3"),
                           lambda s, z: census.distinct_point_plane_distances(s.points3, s.planes3, z).size),
    "distinctPointLine3": (("points3", "lines3"),
                           lambda s, z: census.distinct_point_line3_distances(s.points3, s.lines3, z).size),
    "lineCircleTangencies": (("lines2", "circles2"),
                             lambda s, z: tangency.count_line_circle_tangencies(s.lines2, s.circles2).pair_count),
    "circleTangentPairs": (("circles2",), lambda s, z: tangency.count_circle_tangencies(s.circles2).pair_count),
    "circleTangencyPoints": (("circles2",), lambda s, z: tangency.count_circle_tangencies(s.circles2).point_count),
    "planeSphereTangencies": (("planes3", "spheres3"),
                              lambda s, z: tangency.count_plane_sphere_tangencies(s.planes3, s.spheres3).pair_count),
    "lineSphereTangencies": (("lines3", "spheres3"),
                             lambda s, z: tangency.count_line_sphere_tangencies(s.lines3, s.spheres3).pair_count),
}

DEFAULT_QUANTITY = {
    "ParallelMedian": "distinctPL",
    "CollinearPlusOne": "spannedPL",
    "ElekesGrid": "incidences",
    "PythagoreanTangency": "lineCircleTangencies",
    "ParallelPlanes3D": "distinctPointPlane",
    "ParallelLines3D": "distinctPointLine3",
    "CylinderConfig3D": "distinctPointPlane",
    "ConeConfig3D": "distinctPointPlane",
    "HyperboloidConfig3D": "distinctPointLine3",
    "RandomRational": "distinctPL",
}


@dataclass
class CountRow:
    quantity: str
    value: int
    wall_ms: float


def run_count(scene: Scene, quantity: str, exclude_zero: bool = False) -> CountRow:
    if quantity not in QUANTITIES:
        raise KeyError(f"unknown quantity {quantity!r}; choose from {', '.join(QUANTITIES)}")
    if scene.is_empty():
        raise MissingFamilyError("scene is empty")
    families, fn = QUANTITIES[quantity]
    _need(scene, quantity, *families)
    if quantity == "maxCollinear" and not _points(scene):
        raise MissingFamilyError("maxCollinear needs points2 or points3")
    t0 = time.perf_counter()
    value = fn(scene, exclude_zero)
    return CountRow(quantity, value, (time.perf_counter() - t0) * 1e3)


# -- bound formulas -----------------------------------------------------------

def scene_sizes(scene: Scene) -> dict[str, int]:
    """``m`` points, ``n`` lines/planes, ``k`` circles/spheres."""
    return {
        "m": len(scene.points2) + len(scene.points3),
        "n": len(scene.lines2) + len(scene.planes3) + len(scene.lines3),
        "k": len(scene.circles2) + len(scene.spheres3),
    }


def _t_full(n, k, with_log):
    extra = n ** (6 / 11) * k ** (9 / 11)
    if with_log:
        extra *= math.log(k) ** (2 / 11) if k > 1 else 0.0
    return n ** (2 / 3) * k ** (2 / 3) + extra + k + n


FORMULAS: dict[str, Callable[[dict, Scene], float]] = {
    "D15_35": lambda v, s: v["m"] ** 0.2 * v["n"] ** 0.6,
    "T_23": lambda v, s: v["n"] ** (2 / 3) * v["k"] ** (2 / 3),
    "T_23_log": lambda v, s: _t_full(v["n"], v["k"], True),
    "T_23_nolog": lambda v, s: _t_full(v["n"], v["k"], False),
    "H_43": lambda v, s: v["m"] ** (4 / 3),
    "N32": lambda v, s: v["k"] ** 1.5,
    "PP_13": lambda v, s: min(v["m"] ** (1 / 3) * v["n"] ** (1 / 3), v["n"]),
    "PL3_14": lambda v, s: min(v["m"] ** 0.25 * v["n"] ** 0.25, v["n"]),
    "ceil_half_n": lambda v, s: math.ceil(v["n"] / 2),
    "designed": lambda v, s: float(next(val for key, val in s.metadata.items() if key.startswith("designed_"))),
}


def formula_value(name: str, scene: Scene) -> float:
    if name not in FORMULAS:
        raise KeyError(f"unknown formula {name!r}; choose from {', '.join(FORMULAS)}")
    return float(FORMULAS[name](scene_sizes(scene), scene))


# -- experiments --------------------------------------------------------------

@dataclass
class ExperimentRow:
    params: dict
    observed: int
    formula: float
    ratio: float
    wall_ms: float


@dataclass
class ExperimentReport:
    generator: str
    quantity: str
    formula: str
    rows: list[ExperimentRow] = field(default_factory=list)
    fitted_exponents: dict[str, tuple[float, float]] = field(default_factory=dict)

    def columns(self) -> list[str]:
        keys = list(self.rows[0].params) if self.rows else []
        return keys + ["observed", "formula", "ratio", "wall_ms"]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.columns())
        for r in self.rows:
            w.writerow([*r.params.values(), r.observed, f"{r.formula:.12g}", f"{r.ratio:.12g}", f"{r.wall_ms:.3f}"])
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2)

    def write(self, path) -> None:
        """Write CSV to ``path`` and JSON next to it (same stem, ``.json``)."""
        p = Path(path)
        p.write_text(self.to_csv())
        p.with_suffix(".json").write_text(self.to_json())


def _sweep_point(args) -> tuple[int, float, float]:
    spec, quantity, formula, exclude_zero = args
    try:
        scene = generate(spec)
    except Exception as exc:
        raise RuntimeError(f"generator {spec.name} failed at {spec.params}: {exc}") from exc
    t0 = time.perf_counter()
    row = run_count(scene, quantity, exclude_zero)
    wall = (time.perf_counter() - t0) * 1e3
    return row.value, formula_value(formula, scene), wall


def fit_exponent(xs: Sequence[float], ys: Sequence[float]) -> tuple[float, float]:
    """Least-squares slope (and its standard error) of ``log y`` against ``log x``."""
    res = stats.linregress(np.log(np.asarray(xs, float)), np.log(np.asarray(ys, float)))
    return float(res.slope), float(res.stderr)


def run_experiment(generator: str, sweep: dict[str, Sequence[int]], formula: str,
                   quantity: str | None = None, fixed: dict[str, int] | None = None,
                   seed: int = 0, exclude_zero: bool = False, workers: int = 1) -> ExperimentReport:
    """Generate, count and compare against ``formula`` at each sweep point.

    Swept axes advance together (zipped); all lists must have equal length.
    Exponents are fitted per axis that takes at least two distinct values,
    and only when the sweep has three or more points.
    """
    lengths = {len(v) for v in sweep.values()}
    if not sweep or len(lengths) != 1 or 0 in lengths:
        raise ValueError("sweep must contain equal-length, nonempty value lists")
    quantity = quantity or DEFAULT_QUANTITY[generator]
    fixed = dict(fixed or {})
    n_points = lengths.pop()
    specs = []
    for idx in range(n_points):
        params = {**{ax: int(vals[idx]) for ax, vals in sweep.items()}, **fixed}
        specs.append((GeneratorSpec(generator, params, seed), quantity, formula, exclude_zero))
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_sweep_point, specs))
    else:
        results = [_sweep_point(a) for a in specs]
    report = ExperimentReport(generator, quantity, formula)
    for (spec, *_), (obs, form, wall) in zip(specs, results):
        ratio = obs / form if form else math.inf
        report.rows.append(ExperimentRow(dict(spec.params), obs, form, ratio, wall))
    if n_points >= 3:
        obs = [r.observed for r in report.rows]
        for ax, vals in sweep.items():
            if len(set(vals)) >= 2 and all(o > 0 for o in obs):
                report.fitted_exponents[ax] = fit_exponent(vals, obs)
    return report
