"""JSON scene documents.

A scene names one curve, how to sample its boundary, and optionally a
hiker::

    {"curve": {"type": "circle", "center": [0, 0], "radius": 1},
     "sampling": {"count": 360, "phase": 0},
     "hiker": [0.25, 0],
     "tie_eps": 1e-12}

Unknown keys are rejected at every level.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional

from .errors import ParseError, TopologyError
from .geometry import Circle, Curve, Polygon, Vector
from .magnetization import MagnetizedCurve

DEFAULT_COUNT = 360
DEFAULT_TIE_EPS = 1e-12


@dataclass(frozen=True)
class Scene:
    curve: Curve
    count: int = DEFAULT_COUNT
    phase: float = 0.0
    hiker: Optional[Vector] = None
    tie_eps: float = DEFAULT_TIE_EPS
    ang_tol: Optional[float] = None
    name: str = field(default="scene", compare=False)

    @cached_property
    def magnetized(self) -> MagnetizedCurve:
        return MagnetizedCurve.from_curve(self.curve, self.count, self.phase)

    def require_hiker(self) -> Vector:
        if self.hiker is None:
            raise ParseError(f"{self.name}: this command needs a 'hiker' entry")
        return self.hiker


def _keys(obj, where: str, allowed: set, required: set = frozenset()) -> dict:
    if not isinstance(obj, dict):
        raise ParseError(f"{where} must be an object")
    extra = sorted(set(obj) - allowed)
    if extra:
        raise ParseError(f"unknown key(s) in {where}: {', '.join(extra)}")
    missing = sorted(required - set(obj))
    if missing:
        raise ParseError(f"missing key(s) in {where}: {', '.join(missing)}")
    return obj


def _real(x, where: str) -> float:
    if isinstance(x, bool) or not isinstance(x, (int, float)) or not math.isfinite(x):
        raise ParseError(f"{where} must be a finite number")
    return float(x)


def _point(x, where: str) -> Vector:
    if not isinstance(x, list) or len(x) != 2:
        raise ParseError(f"{where} must be a pair [x, y]")
    return Vector((_real(x[0], where), _real(x[1], where)))


def _curve(raw) -> Curve:
    raw = _keys(raw, "curve", {"type", "center", "radius", "vertices"}, {"type"})
    kind = raw["type"]
    if kind == "circle":
        _keys(raw, "circle curve", {"type", "center", "radius"}, {"type", "center", "radius"})
        return Circle(_point(raw["center"], "curve.center"), _real(raw["radius"], "curve.radius"))
    if kind == "polygon":
        _keys(raw, "polygon curve", {"type", "vertices"}, {"type", "vertices"})
        verts = raw["vertices"]
        if not isinstance(verts, list):
            raise ParseError("curve.vertices must be a list of [x, y] pairs")
        curve = Polygon([_point(p, f"curve.vertices[{i}]") for i, p in enumerate(verts)])
        curve.require_simple()
        return curve
    raise ParseError(f"unsupported curve type {kind!r} (expected 'circle' or 'polygon')")


def parse_scene(text: str, name: str = "scene") -> Scene:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{name}: malformed JSON ({exc.msg} at line {exc.lineno} column {exc.colno})") from None
    doc = _keys(doc, "scene", {"curve", "sampling", "hiker", "tie_eps", "ang_tol"}, {"curve"})
    try:
        curve = _curve(doc["curve"])
    except TopologyError as exc:
        raise TopologyError(f"{name}: {exc}") from None

    sampling = _keys(doc.get("sampling", {}), "sampling", {"count", "phase"})
    count = sampling.get("count", DEFAULT_COUNT)
    if isinstance(count, bool) or not isinstance(count, int):
        raise ParseError("sampling.count must be an integer")
    phase = _real(sampling.get("phase", 0.0), "sampling.phase")
    hiker = _point(doc["hiker"], "hiker") if "hiker" in doc else None
    tie_eps = _real(doc.get("tie_eps", DEFAULT_TIE_EPS), "tie_eps")
    if tie_eps < 0:
        raise ParseError("tie_eps must be non-negative")
    ang_tol = None
    if "ang_tol" in doc:
        ang_tol = _real(doc["ang_tol"], "ang_tol")
        if ang_tol <= 0:
            raise ParseError("ang_tol must be positive")
    return Scene(curve, count, phase, hiker, tie_eps, ang_tol, name)


def load_scene(path) -> Scene:
    with open(path, encoding="utf-8") as fh:
        return parse_scene(fh.read(), str(path))
