"""Vectors, planar closed curves, point location and boundary sampling.

Vector algebra works in any dimension. Curves are planar: a polygon, a
circle, or a loop of sampled points (a polygon that came from data rather
than from a drawing). Every curve is stored counterclockwise.
"""

from __future__ import annotations

import abc
import enum
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from .errors import DimensionError, SamplingError, TopologyError

#: Absolute distance under which a point counts as lying on a boundary.
BOUNDARY_TOL = 1e-9


@dataclass(frozen=True)
class Vector:
    """A point or displacement in R^n with finite coordinates."""

    coords: tuple

    def __post_init__(self):
        coords = tuple(float(c) for c in self.coords)
        if not coords:
            raise DimensionError("a vector needs at least one coordinate")
        if not all(math.isfinite(c) for c in coords):
            raise ValueError(f"non-finite coordinate in {coords}")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def of(cls, *coords: float) -> "Vector":
        return cls(coords)

    @classmethod
    def zero(cls, dim: int) -> "Vector":
        return cls((0.0,) * dim)

    @property
    def dim(self) -> int:
        return len(self.coords)

    @property
    def x(self) -> float:
        return self.coords[0]

    @property
    def y(self) -> float:
        return self.coords[1]

    def is_zero(self) -> bool:
        return all(c == 0.0 for c in self.coords)

    def __iter__(self) -> Iterator[float]:
        return iter(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def _check(self, other: "Vector") -> None:
        if self.dim != other.dim:
            raise DimensionError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other: "Vector") -> "Vector":
        other = as_vector(other)
        self._check(other)
        return Vector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Vector") -> "Vector":
        other = as_vector(other)
        self._check(other)
        return Vector(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __mul__(self, k: float) -> "Vector":
        return Vector(tuple(k * c for c in self.coords))

    __rmul__ = __mul__

    def __neg__(self) -> "Vector":
        return Vector(tuple(-c for c in self.coords))

    def __repr__(self) -> str:
        return "Vector(" + ", ".join(repr(c) for c in self.coords) + ")"


def as_vector(v) -> Vector:
    """Coerce a Vector, tuple, list or 1-d array into a Vector."""
    if isinstance(v, Vector):
        return v
    return Vector(tuple(np.asarray(v, dtype=float).ravel().tolist()))


def dot(u, v) -> float:
    u, v = as_vector(u), as_vector(v)
    u._check(v)
    total = 0.0
    for a, b in zip(u.coords, v.coords):
        total += a * b
    return total


def norm(v) -> float:
    # Plain sum of squares, evaluated left to right: the magnet index and the
    # linear scan use the same expression, so distances agree bit for bit.
    v = as_vector(v)
    total = 0.0
    for c in v.coords:
        total += c * c
    if (total == 0.0 or math.isinf(total)) and not v.is_zero():
        return math.hypot(*v.coords)  # squares under/overflowed
    return math.sqrt(total)


def _point2(p) -> Vector:
    p = as_vector(p)
    if p.dim != 2:
        raise DimensionError(f"planar point required, got dimension {p.dim}")
    return p


# -- curves -----------------------------------------------------------------


class Location(enum.Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    EXTERIOR = "exterior"


@dataclass(frozen=True)
class TopologyReport:
    is_simple: bool
    is_closed: bool
    offending_segment_pair: Optional[tuple] = None


class Curve(abc.ABC):
    """A closed planar curve, oriented counterclockwise."""

    @property
    @abc.abstractmethod
    def perimeter(self) -> float: ...

    @abc.abstractmethod
    def bbox(self) -> tuple:
        """Return ``(xmin, ymin, xmax, ymax)``."""

    @abc.abstractmethod
    def points_at(self, s: np.ndarray) -> np.ndarray:
        """Boundary points at arc lengths ``s`` (each in ``[0, perimeter)``)."""

    @abc.abstractmethod
    def _report(self) -> TopologyReport: ...

    @cached_property
    def topology(self) -> TopologyReport:
        return self._report()

    def require_simple(self) -> None:
        rep = self.topology
        if not rep.is_simple:
            i, j = rep.offending_segment_pair
            raise TopologyError(f"curve is not simple: segments {i} and {j} intersect")


class Polygon(Curve):
    """A polygon given by its vertices; the closing edge is implicit."""

    kind = "polygon"

    def __init__(self, vertices: Iterable):
        v = np.array([as_vector(p).coords for p in vertices], dtype=float)
        if v.ndim != 2 or len(v) < 3:
            raise TopologyError(f"a {self.kind} needs at least 3 vertices")
        if v.shape[1] != 2:
            raise DimensionError(f"{self.kind} vertices must be planar")
        nxt = np.roll(v, -1, axis=0)
        dup = np.flatnonzero(np.all(v == nxt, axis=1))
        if len(dup):
            i = int(dup[0])
            raise TopologyError(f"consecutive vertices {i} and {(i + 1) % len(v)} coincide")
        if _signed_area(v) < 0:
            # keep the first vertex first so arc length still starts there
            v = np.concatenate([v[:1], v[:0:-1]])
        v.setflags(write=False)
        self._v = v

    @property
    def vertices(self) -> np.ndarray:
        return self._v

    def __len__(self) -> int:
        return len(self._v)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self._v.tolist()!r})"

    def edges(self) -> tuple:
        """Segment start and end points, both shaped ``(n, 2)``."""
        return self._v, np.roll(self._v, -1, axis=0)

    @cached_property
    def _lengths(self) -> np.ndarray:
        a, b = self.edges()
        d = b - a
        return np.sqrt(d[:, 0] * d[:, 0] + d[:, 1] * d[:, 1])

    @cached_property
    def _cumulative(self) -> np.ndarray:
        return np.concatenate([[0.0], np.cumsum(self._lengths)])

    @property
    def perimeter(self) -> float:
        return float(self._cumulative[-1])

    def bbox(self) -> tuple:
        lo, hi = self._v.min(axis=0), self._v.max(axis=0)
        return float(lo[0]), float(lo[1]), float(hi[0]), float(hi[1])

    def points_at(self, s: np.ndarray) -> np.ndarray:
        s = np.asarray(s, dtype=float)
        cum = self._cumulative
        seg = np.clip(np.searchsorted(cum, s, side="right") - 1, 0, len(self._v) - 1)
        a, b = self.edges()
        t = (s - cum[seg]) / self._lengths[seg]
        return a[seg] + t[:, None] * (b[seg] - a[seg])

    def _report(self) -> TopologyReport:
        pair = _first_intersecting_pair(self._v)
        return TopologyReport(pair is None, True, pair)


class SampledLoop(Polygon):
    """A closed loop of measured points, treated as the polygon through them."""

    kind = "sampled loop"

    @property
    def points(self) -> np.ndarray:
        return self._v


class Circle(Curve):
    kind = "circle"

    def __init__(self, center, radius: float):
        center = as_vector(center)
        if center.dim != 2:
            raise DimensionError("circle center must be planar")
        radius = float(radius)
        if not (math.isfinite(radius) and radius > 0):
            raise TopologyError(f"circle radius must be positive, got {radius}")
        self.center = center
        self.radius = radius

    def __repr__(self) -> str:
        return f"Circle({list(self.center.coords)!r}, {self.radius!r})"

    @property
    def perimeter(self) -> float:
        return 2.0 * math.pi * self.radius

    def bbox(self) -> tuple:
        cx, cy = self.center.coords
        r = self.radius
        return cx - r, cy - r, cx + r, cy + r

    def angles_at(self, s: np.ndarray) -> np.ndarray:
        return np.asarray(s, dtype=float) / self.radius

    def points_at(self, s: np.ndarray) -> np.ndarray:
        return self._points_at_angle(self.angles_at(s))

    def _points_at_angle(self, theta: np.ndarray) -> np.ndarray:
        cx, cy = self.center.coords
        return np.column_stack([cx + self.radius * np.cos(theta), cy + self.radius * np.sin(theta)])

    def _report(self) -> TopologyReport:
        return TopologyReport(True, True, None)


def _signed_area(v: np.ndarray) -> float:
    x, y = v[:, 0], v[:, 1]
    return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(np.roll(x, -1), y))


def _orient(ax, ay, bx, by, cx, cy):
    return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)


def _within(ax, ay, bx, by, px, py):
    return (
        (np.minimum(ax, bx) <= px) & (px <= np.maximum(ax, bx))
        & (np.minimum(ay, by) <= py) & (py <= np.maximum(ay, by))
    )


def _first_intersecting_pair(v: np.ndarray) -> Optional[tuple]:
    """Lexicographically first pair of segments that meet improperly.

    Non-adjacent segments may not touch at all; adjacent ones may only
    share their common vertex (a fold back along the same line is caught).
    """
    n = len(v)
    a, b = v, np.roll(v, -1, axis=0)
    found = []

    # folds at vertex k between segments k-1 and k
    prev, nxt = np.roll(v, 1, axis=0), b
    turn = _orient(prev[:, 0], prev[:, 1], v[:, 0], v[:, 1], nxt[:, 0], nxt[:, 1])
    back = (prev[:, 0] - v[:, 0]) * (nxt[:, 0] - v[:, 0]) + (prev[:, 1] - v[:, 1]) * (nxt[:, 1] - v[:, 1])
    for k in np.flatnonzero((turn == 0) & (back > 0)):
        i, j = sorted(((int(k) - 1) % n, int(k)))
        found.append((i, j))

    ax, ay, bx, by = a[:, 0], a[:, 1], b[:, 0], b[:, 1]
    idx = np.arange(n)
    rows = max(1, 2_000_000 // max(n, 1))
    for r0 in range(0, n, rows):
        i = idx[r0:r0 + rows, None]
        pax, pay, pbx, pby = ax[i], ay[i], bx[i], by[i]
        o1 = _orient(pax, pay, pbx, pby, ax, ay)
        o2 = _orient(pax, pay, pbx, pby, bx, by)
        o3 = _orient(ax, ay, bx, by, pax, pay)
        o4 = _orient(ax, ay, bx, by, pbx, pby)
        hit = ((o1 * o2 < 0) & (o3 * o4 < 0))
        hit |= (o1 == 0) & _within(pax, pay, pbx, pby, ax, ay)
        hit |= (o2 == 0) & _within(pax, pay, pbx, pby, bx, by)
        hit |= (o3 == 0) & _within(ax, ay, bx, by, pax, pay)
        hit |= (o4 == 0) & _within(ax, ay, bx, by, pbx, pby)
        j = idx[None, :]
        hit &= (j > i + 1) & ~((i == 0) & (j == n - 1))
        pairs = np.argwhere(hit)
        if len(pairs):
            found.append((int(pairs[0, 0]) + r0, int(pairs[0, 1])))
            break
    return min(found) if found else None


def validate_topology(c: Curve) -> TopologyReport:
    return c.topology


# -- point location -----------------------------------------------------------


def _segment_distances(a: np.ndarray, b: np.ndarray, p: np.ndarray) -> tuple:
    """Distances from ``p`` to each segment plus the closest points."""
    d = b - a
    w = p - a
    den = d[:, 0] * d[:, 0] + d[:, 1] * d[:, 1]
    t = np.clip((w[:, 0] * d[:, 0] + w[:, 1] * d[:, 1]) / den, 0.0, 1.0)
    q = a + t[:, None] * d
    e = q - p
    return np.sqrt(e[:, 0] * e[:, 0] + e[:, 1] * e[:, 1]), q


def boundary_distance(c: Curve, p) -> float:
    p = _point2(p)
    if isinstance(c, Circle):
        return abs(norm(p - c.center) - c.radius)
    a, b = c.edges()
    return float(_segment_distances(a, b, np.array(p.coords))[0].min())


def point_location(c: Curve, p) -> Location:
    """Classify ``p`` against the curve with a 1e-9 boundary band."""
    p = _point2(p)
    c.require_simple()
    if isinstance(c, Circle):
        r = norm(p - c.center)
        if abs(r - c.radius) <= BOUNDARY_TOL:
            return Location.BOUNDARY
        return Location.INTERIOR if r < c.radius else Location.EXTERIOR
    if boundary_distance(c, p) <= BOUNDARY_TOL:
        return Location.BOUNDARY
    px, py = p.coords
    a, b = c.edges()
    ax, ay, bx, by = a[:, 0], a[:, 1], b[:, 0], b[:, 1]
    straddle = (ay > py) != (by > py)
    ax, ay, bx, by = ax[straddle], ay[straddle], bx[straddle], by[straddle]
    xs = ax + (py - ay) * (bx - ax) / (by - ay)
    crossings = int(np.count_nonzero(xs > px))
    return Location.INTERIOR if crossings % 2 else Location.EXTERIOR


# -- magnets -----------------------------------------------------------------


class MagnetSet:
    """Ordered magnets on a boundary; a magnet's id is its position.

    ``spacing`` is the largest arc-length gap between neighbours. For a
    free-standing point set it defaults to the largest gap around the
    closed polyline through the points.
    """

    def __init__(self, points, spacing: Optional[float] = None, curve: Optional[Curve] = None):
        pts = np.array(points, dtype=float)
        if pts.ndim != 2 or pts.shape[1] != 2:
            raise DimensionError("magnets must be planar points")
        if len(pts) < 3:
            raise SamplingError("a magnet set needs at least 3 magnets")
        if not np.all(np.isfinite(pts)):
            raise ValueError("non-finite magnet coordinate")
        if spacing is None:
            gap = np.roll(pts, -1, axis=0) - pts
            spacing = float(np.sqrt((gap * gap).sum(axis=1)).max())
        pts.setflags(write=False)
        self.points = pts
        self.spacing = float(spacing)
        self.curve = curve

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, i: int) -> Vector:
        return Vector(tuple(self.points[i].tolist()))

    def __iter__(self) -> Iterator[Vector]:
        for i in range(len(self)):
            yield self[i]

    def __repr__(self) -> str:
        return f"MagnetSet(n={len(self)}, spacing={self.spacing!r})"


def sample_boundary(c: Curve, count: int, phase: float = 0.0) -> MagnetSet:
    """Place ``count`` magnets at uniform arc length, offset by ``phase`` spacings.

    Arc length starts at the first vertex for polygons and at angle 0 for
    circles; magnets run counterclockwise.

    >>> sample_boundary(Polygon([(0, 0), (1, 0), (1, 1), (0, 1)]), 4).points.tolist()
    [[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]]
    """
    if isinstance(count, bool) or int(count) != count or count < 3:
        raise SamplingError(f"need an integer count >= 3, got {count!r}")
    count = int(count)
    phase = float(phase)
    if not 0.0 <= phase < 1.0:
        raise SamplingError(f"phase must lie in [0, 1), got {phase}")
    c.require_simple()
    k = np.arange(count, dtype=float) + phase
    if isinstance(c, Circle):
        pts = c._points_at_angle(2.0 * math.pi * k / count)
    else:
        pts = c.points_at(k * c.perimeter / count)
    return MagnetSet(pts, c.perimeter / count, c)


def regular_polygon(n: int, radius: float = 1.0, center: Sequence[float] = (0.0, 0.0),
                    rotation: float = 0.0) -> Polygon:
    t = rotation + 2.0 * math.pi * np.arange(n) / n
    return Polygon(np.column_stack([center[0] + radius * np.cos(t), center[1] + radius * np.sin(t)]))
