"""Exact point-line distance and tangency censuses, dual transforms, and
extremal-configuration generators and detectors."""
from .kernel import (
    Circle2, DegenerateError, GeometryError, Line2, Line3, Plane3, Point2, Point3,
    PreconditionError, Sphere3,
)
from .scene import Scene, load_scene, save_scene

__all__ = [
    "Circle2", "DegenerateError", "GeometryError", "Line2", "Line3", "Plane3", "Point2",
    "Point3", "PreconditionError", "Scene", "Sphere3", "load_scene", "save_scene",
]
__version__ = "0.1.0"
