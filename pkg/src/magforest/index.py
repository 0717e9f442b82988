"""Nearest-magnet and epsilon-field queries over a magnet set.

The index cuts the magnets into runs of consecutive ids. Boundary samples
arrive in curve order, so each run hugs a short stretch of the curve and is
bounded tightly by a capsule: the chord between its first and last magnet,
thickened by the largest deviation from that chord. A query prunes whole
runs by capsule distance and then measures the survivors exactly.

Boxes (grid cells, kd-tree nodes) fit curve samples badly: seen from deep
inside a curve, hundreds of box corners poke into the nearest-distance band.
Capsules follow the curve and usually leave one or two runs standing.

``scan_nearest`` and ``scan_field`` are the brute-force oracles. Both the
index and the scans compute a distance as ``sqrt(dx*dx + dy*dy)``, so
results agree exactly rather than to a tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from numba import njit

from .geometry import MagnetSet, _point2


@dataclass(frozen=True)
class NearestResult:
    """``ties`` holds every id within ``distance + tie_eps``; ``chosen_id`` is the smallest."""

    chosen_id: int
    distance: float
    ties: tuple


@njit(cache=True)
def _capsules(x, y, starts, ends):
    m = starts.shape[0]
    ax = np.empty(m)
    ay = np.empty(m)
    ex = np.empty(m)
    ey = np.empty(m)
    inv = np.empty(m)
    rad = np.empty(m)
    for c in range(m):
        s, e = starts[c], ends[c]
        ax[c] = x[s]
        ay[c] = y[s]
        ex[c] = x[e - 1] - x[s]
        ey[c] = y[e - 1] - y[s]
        l2 = ex[c] * ex[c] + ey[c] * ey[c]
        inv[c] = 1.0 / l2 if l2 > 0.0 else 0.0
        r = 0.0
        for i in range(s, e):
            px = x[i] - ax[c]
            py = y[i] - ay[c]
            t = min(max((px * ex[c] + py * ey[c]) * inv[c], 0.0), 1.0)
            qx = px - t * ex[c]
            qy = py - t * ey[c]
            r = max(r, math.sqrt(qx * qx + qy * qy))
        rad[c] = r
    return ax, ay, ex, ey, inv, rad


@njit(cache=True)
def _lower_bound(c, vx, vy, ax, ay, ex, ey, inv, rad):
    px = vx - ax[c]
    py = vy - ay[c]
    t = min(max((px * ex[c] + py * ey[c]) * inv[c], 0.0), 1.0)
    qx = px - t * ex[c]
    qy = py - t * ey[c]
    return math.sqrt(qx * qx + qy * qy) - rad[c]


@njit(cache=True)
def _nearest(x, y, ids, starts, ends, ax, ay, ex, ey, inv, rad, vx, vy, tie_eps, slack):
    m = starts.shape[0]
    ub = np.inf
    for c in range(m):
        dx = x[starts[c]] - vx
        dy = y[starts[c]] - vy
        ub = min(ub, math.sqrt(dx * dx + dy * dy))
    limit = ub + tie_eps + slack
    kept = np.empty(m, np.int64)
    nk = 0
    total = 0
    for c in range(m):
        if _lower_bound(c, vx, vy, ax, ay, ex, ey, inv, rad) <= limit:
            kept[nk] = c
            nk += 1
            total += ends[c] - starts[c]
    dist = np.empty(total)
    who = np.empty(total, np.int64)
    k = 0
    best = np.inf
    for j in range(nk):
        c = kept[j]
        for i in range(starts[c], ends[c]):
            dx = x[i] - vx
            dy = y[i] - vy
            d = math.sqrt(dx * dx + dy * dy)
            dist[k] = d
            who[k] = ids[i]
            k += 1
            if d < best:
                best = d
    cut = best + tie_eps
    ties = np.empty(total, np.int64)
    nt = 0
    for i in range(total):
        if dist[i] <= cut:
            ties[nt] = who[i]
            nt += 1
    ties = np.sort(ties[:nt])
    return best, ties


@njit(cache=True)
def _field(x, y, ids, starts, ends, ax, ay, ex, ey, inv, rad, vx, vy, eps, slack):
    out = np.empty(x.shape[0], np.int64)
    n = 0
    for c in range(starts.shape[0]):
        if _lower_bound(c, vx, vy, ax, ay, ex, ey, inv, rad) > eps + slack:
            continue
        for i in range(starts[c], ends[c]):
            dx = x[i] - vx
            dy = y[i] - vy
            if math.sqrt(dx * dx + dy * dy) <= eps:
                out[n] = ids[i]
                n += 1
    return np.sort(out[:n])


class SpatialIndex:
    """Immutable capsule-run index over a :class:`MagnetSet`.

    ``order`` fixes the layout (insertion order) of magnets into runs; it
    defaults to id order. Results never depend on it.
    """

    def __init__(self, magnets: MagnetSet, chunk_size: Optional[int] = None, order=None):
        n = len(magnets)
        if order is None:
            order = np.arange(n)
        order = np.asarray(order, dtype=np.int64)
        if sorted(order.tolist()) != list(range(n)):
            raise ValueError("order must be a permutation of magnet ids")
        if chunk_size is None:
            chunk_size = max(8, math.isqrt(n - 1) + 1)
        self.magnets = magnets
        self.chunk_size = int(chunk_size)
        pts = magnets.points[order]
        self._x = np.ascontiguousarray(pts[:, 0])
        self._y = np.ascontiguousarray(pts[:, 1])
        self._ids = order
        self._starts = np.arange(0, n, self.chunk_size, dtype=np.int64)
        self._ends = np.minimum(self._starts + self.chunk_size, n)
        self._caps = _capsules(self._x, self._y, self._starts, self._ends)
        # absorbs rounding in the capsule bounds; the final test is exact
        self._scale = 1.0 + float(np.abs(magnets.points).max())

    @property
    def chunks(self) -> list:
        """Magnet ids per run, in layout order."""
        return [self._ids[s:e].tolist() for s, e in zip(self._starts, self._ends)]

    def __len__(self) -> int:
        return len(self.magnets)

    def _slack(self, vx: float, vy: float) -> float:
        return 1e-9 * (self._scale + abs(vx) + abs(vy))

    def nearest(self, v, tie_eps: float = 0.0) -> NearestResult:
        vx, vy = _point2(v).coords
        if tie_eps < 0:
            raise ValueError("tie_eps must be non-negative")
        best, ties = _nearest(self._x, self._y, self._ids, self._starts, self._ends, *self._caps,
                              vx, vy, float(tie_eps), self._slack(vx, vy))
        ties = tuple(ties.tolist())
        return NearestResult(ties[0], float(best), ties)

    def field(self, center, eps: float) -> frozenset:
        vx, vy = _point2(center).coords
        if eps < 0:
            raise ValueError("eps must be non-negative")
        got = _field(self._x, self._y, self._ids, self._starts, self._ends, *self._caps,
                     vx, vy, float(eps), self._slack(vx, vy))
        return frozenset(got.tolist())


def build_index(m: MagnetSet, chunk_size: Optional[int] = None, order=None) -> SpatialIndex:
    return SpatialIndex(m, chunk_size, order)


def nearest_magnet(ix: SpatialIndex, v, tie_eps: float = 0.0) -> NearestResult:
    return ix.nearest(v, tie_eps)


def epsilon_field_members(ix: SpatialIndex, center, eps: float) -> frozenset:
    """Ids of magnets in the closed ball of radius ``eps`` about ``center``."""
    return ix.field(center, eps)


# -- brute-force oracles -------------------------------------------------------


def scan_distances(points: np.ndarray, v) -> np.ndarray:
    vx, vy = _point2(v).coords
    dx = points[:, 0] - vx
    dy = points[:, 1] - vy
    return np.sqrt(dx * dx + dy * dy)


def scan_nearest(points: np.ndarray, v, tie_eps: float = 0.0) -> NearestResult:
    d = scan_distances(points, v)
    best = d.min()
    ties = tuple(np.flatnonzero(d <= best + tie_eps).tolist())
    return NearestResult(ties[0], float(best), ties)


def scan_field(points: np.ndarray, center, eps: float) -> frozenset:
    return frozenset(np.flatnonzero(scan_distances(points, center) <= eps).tolist())
