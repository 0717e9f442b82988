"""The nearest-magnet map on the interior of a magnetized curve.

A point ``v`` inside the curve is sent to ``u - v`` where ``u`` is the
magnet closest to ``v``; ``|u - v|`` is the measure of magnetization.
The orthogonality condition ``v . u = 0`` is never enforced. How far a
scene is from satisfying it is reported as ``ortho_residual``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .errors import DegenerateMagnetError, LocationError, OriginError
from .geometry import (
    Curve,
    Location,
    MagnetSet,
    Vector,
    _point2,
    dot,
    norm,
    point_location,
    sample_boundary,
)
from .index import SpatialIndex, build_index


@dataclass(frozen=True)
class MagnetizedCurve:
    curve: Curve
    magnets: MagnetSet
    index: SpatialIndex

    @classmethod
    def from_curve(cls, curve: Curve, count: int, phase: float = 0.0, **index_kw) -> "MagnetizedCurve":
        magnets = sample_boundary(curve, count, phase)
        return cls(curve, magnets, build_index(magnets, **index_kw))

    def __len__(self) -> int:
        return len(self.magnets)


@dataclass(frozen=True)
class Magnetization:
    source: Vector
    chosen_id: int
    magnet: Vector
    path: Vector
    measure: float
    ties: tuple
    ortho_residual: float


def ortho_residual(v: Vector, u: Vector) -> float:
    """``|v.u| / (|v||u|)``, or 0 when either vector is zero."""
    nv, nu = norm(v), norm(u)
    if nv == 0.0 or nu == 0.0:
        return 0.0
    return min(1.0, abs(dot(v, u)) / (nv * nu))


def require_interior(curve: Curve, v, strict_origin: bool) -> Vector:
    v = _point2(v)
    where = point_location(curve, v)
    if where is not Location.INTERIOR:
        raise LocationError(f"point {list(v.coords)} is on the {where.value}, not inside the curve"
                            if where is Location.BOUNDARY else
                            f"point {list(v.coords)} lies outside the curve")
    if strict_origin and v.is_zero():
        raise OriginError("the origin is excluded (pass strict_origin=False to allow it)")
    return v


def magnetize(mc: MagnetizedCurve, v, strict_origin: bool = True, tie_eps: float = 0.0) -> Magnetization:
    """Apply the magnetization map at the interior point ``v``.

    With ``tie_eps > 0`` the chosen magnet is the lowest id among all
    magnets within ``tie_eps`` of the minimum, so ``measure`` may exceed
    the true minimum by at most ``tie_eps``.
    """
    v = require_interior(mc.curve, v, strict_origin)
    hit = mc.index.nearest(v, tie_eps)
    u = mc.magnets[hit.chosen_id]
    path = u - v
    return Magnetization(v, hit.chosen_id, u, path, norm(path), hit.ties, ortho_residual(v, u))


def isolating_radius(mc: MagnetizedCurve, v, strict_origin: bool = True) -> float:
    """Radius of the closed ball about ``v`` that reaches its nearest magnet and no nearer one."""
    return magnetize(mc, v, strict_origin).measure


@dataclass(frozen=True)
class StrictlyIsolated:
    magnet_id: int
    radius: float


@dataclass(frozen=True)
class TiedIsolation:
    ids: tuple
    radius: float


def verify_isolation(mc: MagnetizedCurve, v, tie_eps: float = 0.0,
                     strict_origin: bool = True) -> Union[StrictlyIsolated, TiedIsolation]:
    """Check whether a single magnet attains the minimum distance from ``v``.

    Returns :class:`StrictlyIsolated` when the ball of radius ``measure``
    holds exactly one magnet (up to ``tie_eps``), else the full tie set.
    """
    m = magnetize(mc, v, strict_origin, tie_eps)
    if len(m.ties) == 1:
        return StrictlyIsolated(m.chosen_id, m.measure)
    return TiedIsolation(m.ties, m.measure)


@dataclass(frozen=True)
class DilateCheck:
    dilate_lambda: float
    angular_dev: float
    first: Magnetization
    second: Magnetization


def resample_uniqueness(c: Curve, v, count1: int, count2: int, phase: float = 0.0,
                        strict_origin: bool = True) -> DilateCheck:
    """Magnetize ``v`` at two resolutions and compare the chosen magnets.

    ``dilate_lambda`` is the least-squares scale with ``u1 ~ lambda * u2``
    and ``angular_dev`` the angle between ``u1`` and ``u2`` as position
    vectors. A small angle means the two choices are near-dilates.
    """
    m1 = magnetize(MagnetizedCurve.from_curve(c, count1, phase), v, strict_origin)
    m2 = magnetize(MagnetizedCurve.from_curve(c, count2, phase), v, strict_origin)
    u1, u2 = m1.magnet, m2.magnet
    if u1.is_zero() or u2.is_zero():
        raise DegenerateMagnetError("chosen magnet is the origin; no dilate relation exists")
    lam = dot(u1, u2) / dot(u2, u2)
    cross = u1.x * u2.y - u1.y * u2.x
    return DilateCheck(lam, math.atan2(abs(cross), dot(u1, u2)), m1, m2)
