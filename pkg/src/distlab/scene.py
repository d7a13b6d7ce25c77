"""Heterogeneous exact scenes and their JSON form.

Rationals are written as strings ``"num/den"`` (``"num"`` when the
denominator is 1).  Plain JSON integers are accepted on input; floats are not.

Document layout::

    {
      "points2":  [["x", "y"], ...],
      "lines2":   [["a", "b", "c"], ...],             # a*x + b*y + c = 0
      "circles2": [{"center": ["x", "y"], "r2": "..."}, ...],
      "points3":  [["x", "y", "z"], ...],
      "planes3":  [["a", "b", "c", "d"], ...],        # a*x + b*y + c*z + d = 0
      "lines3":   [{"u": ["x", "y", "z"], "v": ["vx", "vy", "vz"]}, ...],
      "spheres3": [{"center": ["x", "y", "z"], "r2": "..."}, ...],
      "metadata": {"key": "value", ...}
    }
"""
from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field, fields, replace
from pathlib import Path

from .kernel import (
    Circle2, GeometryError, Line2, Line3, Plane3, Point2, Point3, Sphere3,
    canonical_unique, format_rational, parse_rational,
)

log = logging.getLogger(__name__)

FAMILIES = ("points2", "lines2", "circles2", "points3", "planes3", "lines3", "spheres3")


class SceneFormatError(GeometryError):
    """Malformed scene document."""


@dataclass
class Scene:
    points2: list[Point2] = field(default_factory=list)
    lines2: list[Line2] = field(default_factory=list)
    circles2: list[Circle2] = field(default_factory=list)
    points3: list[Point3] = field(default_factory=list)
    planes3: list[Plane3] = field(default_factory=list)
    lines3: list[Line3] = field(default_factory=list)
    spheres3: list[Sphere3] = field(default_factory=list)
    metadata: dict[str, str] = field(default_factory=dict)

    def canonical(self) -> tuple["Scene", dict[str, int]]:
        """Deduplicated copy plus the number of merged duplicates per family."""
        merged = {}
        updates = {}
        for name in FAMILIES:
            items = getattr(self, name)
            uniq = canonical_unique(items)
            if len(uniq) != len(items):
                merged[name] = len(items) - len(uniq)
            updates[name] = uniq
        return replace(self, metadata=dict(self.metadata), **updates), merged

    def is_empty(self) -> bool:
        return not any(getattr(self, name) for name in FAMILIES)

    def counts(self) -> dict[str, int]:
        return {name: len(getattr(self, name)) for name in FAMILIES}


# -- encoding -----------------------------------------------------------------

def _q(values):
    return [format_rational(v) for v in values]


def scene_to_dict(scene: Scene) -> dict:
    return {
        "points2": [_q(p) for p in scene.points2],
        "lines2": [_q((l.a, l.b, l.c)) for l in scene.lines2],
        "circles2": [{"center": _q(c.center), "r2": format_rational(c.r2)} for c in scene.circles2],
        "points3": [_q(p) for p in scene.points3],
        "planes3": [_q((p.a, p.b, p.c, p.d)) for p in scene.planes3],
        "lines3": [{"u": _q(l.u), "v": _q(l.v)} for l in scene.lines3],
        "spheres3": [{"center": _q(s.center), "r2": format_rational(s.r2)} for s in scene.spheres3],
        "metadata": {str(k): str(v) for k, v in scene.metadata.items()},
    }


def dumps_scene(scene: Scene) -> str:
    return json.dumps(scene_to_dict(scene), indent=2) + "\n"


def save_scene(scene: Scene, path) -> None:
    Path(path).write_text(dumps_scene(scene))


# -- decoding -----------------------------------------------------------------

def _rat(value, where: str):
    if isinstance(value, bool) or isinstance(value, float):
        raise SceneFormatError(f"{where}: expected rational string or integer, got {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return parse_rational(value)
        except GeometryError as exc:
            raise SceneFormatError(f"{where}: {exc}") from None
    raise SceneFormatError(f"{where}: expected rational, got {type(value).__name__}")


def _vec(value, n: int, where: str):
    if not isinstance(value, list) or len(value) != n:
        raise SceneFormatError(f"{where}: expected list of {n} rationals")
    return [_rat(v, f"{where}[{i}]") for i, v in enumerate(value)]


def _obj(value, keys, where):
    if not isinstance(value, dict) or not all(k in value for k in keys):
        raise SceneFormatError(f"{where}: expected object with keys {', '.join(keys)}")
    return value


def _build(kind: str, raw, where: str):
    if kind == "points2":
        return Point2(*_vec(raw, 2, where))
    if kind == "lines2":
        return Line2(*_vec(raw, 3, where))
    if kind == "circles2":
        o = _obj(raw, ("center", "r2"), where)
        return Circle2(Point2(*_vec(o["center"], 2, where + ".center")), _rat(o["r2"], where + ".r2"))
    if kind == "points3":
        return Point3(*_vec(raw, 3, where))
    if kind == "planes3":
        return Plane3(*_vec(raw, 4, where))
    if kind == "lines3":
        o = _obj(raw, ("u", "v"), where)
        return Line3(Point3(*_vec(o["u"], 3, where + ".u")), tuple(_vec(o["v"], 3, where + ".v")))
    if kind == "spheres3":
        o = _obj(raw, ("center", "r2"), where)
        return Sphere3(Point3(*_vec(o["center"], 3, where + ".center")), _rat(o["r2"], where + ".r2"))
    raise AssertionError(kind)


def scene_from_dict(doc) -> Scene:
    if not isinstance(doc, dict):
        raise SceneFormatError("scene document must be a JSON object")
    unknown = set(doc) - set(FAMILIES) - {"metadata"}
    if unknown:
        raise SceneFormatError(f"unknown scene fields: {', '.join(sorted(unknown))}")
    scene = Scene()
    for kind in FAMILIES:
        raw = doc.get(kind, [])
        if not isinstance(raw, list):
            raise SceneFormatError(f"{kind}: expected a list")
        objs = []
        for i, item in enumerate(raw):
            where = f"{kind}[{i}]"
            try:
                objs.append(_build(kind, item, where))
            except SceneFormatError:
                raise
            except GeometryError as exc:
                raise SceneFormatError(f"{where}: {exc}") from None
        setattr(scene, kind, objs)
    meta = doc.get("metadata", {})
    if not isinstance(meta, dict):
        raise SceneFormatError("metadata: expected an object")
    scene.metadata = {str(k): str(v) for k, v in meta.items()}
    return scene


def loads_scene(text: str, source: str = "<string>") -> tuple[Scene, dict[str, int]]:
    """Parse and canonicalize; returns the scene and the merged-duplicate counts."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SceneFormatError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    scene, merged = scene_from_dict(doc).canonical()
    for kind, n in merged.items():
        log.warning("%s: merged %d duplicate %s", source, n, kind)
    return scene, merged


def read_scene(path) -> tuple[Scene, dict[str, int]]:
    return loads_scene(Path(path).read_text(), str(path))


def load_scene(path) -> Scene:
    return read_scene(path)[0]


def map_scene(scene: Scene, **funcs) -> Scene:
    """Apply per-family element maps (e.g. ``points2=iso.point``) and re-canonicalize."""
    updates = {}
    for f in fields(Scene):
        if f.name in funcs:
            updates[f.name] = [funcs[f.name](x) for x in getattr(scene, f.name)]
    return replace(scene, metadata=dict(scene.metadata), **updates).canonical()[0]
