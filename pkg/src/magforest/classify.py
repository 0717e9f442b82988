"""Dilate relations between magnets and the isomorphism classes they induce.

Two magnets are dilates when one is a real multiple of the other, i.e. they
lie on a common line through the origin. Negative multiples count, so only
the direction modulo pi matters. Two curves are connected when some pair of
their magnets are dilates, and isomorphic when every magnet on either curve
has a dilate partner on the other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np
from scipy.cluster.hierarchy import DisjointSet

from .errors import DegenerateMagnetError
from .geometry import as_vector, dot, norm
from .magnetization import MagnetizedCurve


@dataclass(frozen=True)
class DilateWitness:
    """Certificate that magnet ``a`` is ``lam`` times magnet ``b``.

    ``angular_residual`` is how far the pair is from being collinear with
    the origin, in radians: the angle between them, or its supplement when
    they point in opposite directions.
    """

    lam: float
    angular_residual: float
    id_a: Optional[int] = None
    id_b: Optional[int] = None


def _witness(a, b, id_a=None, id_b=None) -> DilateWitness:
    na, nb = norm(a), norm(b)
    if na == 0.0 or nb == 0.0:
        raise DegenerateMagnetError("dilates are undefined for the zero vector")
    cross = a[0] * b[1] - a[1] * b[0]
    d = dot(a, b)
    angle = math.atan2(abs(cross), d)
    if d < 0:
        return DilateWitness(-na / nb, math.pi - angle, id_a, id_b)
    return DilateWitness(na / nb, angle, id_a, id_b)


def is_dilate(a, b, ang_tol: float) -> Optional[DilateWitness]:
    """Return a witness when ``a`` and ``b`` are collinear through the origin within ``ang_tol``."""
    a, b = as_vector(a), as_vector(b)
    w = _witness(a, b)
    return w if w.angular_residual <= ang_tol else None


def _directions(mc: MagnetizedCurve) -> np.ndarray:
    p = mc.magnets.points
    if np.any((p[:, 0] == 0.0) & (p[:, 1] == 0.0)):
        raise DegenerateMagnetError("a magnet sits at the origin")
    return np.mod(np.arctan2(p[:, 1], p[:, 0]), math.pi)


def _line_gap(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Angular distance between line directions taken modulo pi."""
    g = np.mod(np.abs(a - b), math.pi)
    return np.minimum(g, math.pi - g)


def _nearest_gap(src: np.ndarray, dst_sorted: np.ndarray) -> np.ndarray:
    m = len(dst_sorted)
    pos = np.searchsorted(dst_sorted, src)
    left = dst_sorted[(pos - 1) % m]
    right = dst_sorted[pos % m]
    return np.minimum(_line_gap(src, left), _line_gap(src, right))


def default_tolerance(A: MagnetizedCurve, B: MagnetizedCurve) -> float:
    return 2.0 * math.pi / min(len(A), len(B))


def is_connected(A: MagnetizedCurve, B: MagnetizedCurve,
                 ang_tol: Optional[float] = None) -> Optional[DilateWitness]:
    """First dilate pair found scanning A's magnets by direction, or None.

    Among B's partners of that magnet the most collinear one wins, then a
    positive scale, then the lower id.
    """
    tol = default_tolerance(A, B) if ang_tol is None else ang_tol
    da, db = _directions(A), _directions(B)
    gaps = _nearest_gap(da, np.sort(db))
    order = np.lexsort((np.arange(len(da)), da))
    hits = order[gaps[order] <= tol]
    if not len(hits):
        return None
    ia = int(hits[0])
    cand = np.flatnonzero(_line_gap(db, da[ia]) <= tol)
    a = A.magnets[ia]
    best = None
    for ib in cand.tolist():
        w = _witness(a, B.magnets[ib], ia, ib)
        key = (w.angular_residual, w.lam < 0, ib)
        if best is None or key < best[0]:
            best = (key, w)
    return best[1]


def is_isomorphic(A: MagnetizedCurve, B: MagnetizedCurve, ang_tol: Optional[float] = None) -> bool:
    """True when every magnet of A has a dilate partner in B and vice versa."""
    tol = default_tolerance(A, B) if ang_tol is None else ang_tol
    da, db = _directions(A), _directions(B)
    return bool(np.all(_nearest_gap(da, np.sort(db)) <= tol)
                and np.all(_nearest_gap(db, np.sort(da)) <= tol))


@dataclass(frozen=True)
class IsoClassPartition:
    """``classes`` are sorted tuples of corpus positions, ordered by smallest member."""

    classes: tuple
    witnesses: dict = field(default_factory=dict)

    def class_of(self, i: int) -> int:
        for k, members in enumerate(self.classes):
            if i in members:
                return k
        raise KeyError(i)


def partition_corpus(curves: Sequence[MagnetizedCurve], ang_tol: Optional[float] = None) -> IsoClassPartition:
    """Group curves into isomorphism classes with a union-find over all pairs."""
    if not curves:
        raise ValueError("empty corpus")
    n = len(curves)
    ds = DisjointSet(range(n))
    witnesses = {}
    for i in range(n):
        for j in range(i + 1, n):
            if is_isomorphic(curves[i], curves[j], ang_tol):
                witnesses[(i, j)] = is_connected(curves[i], curves[j], ang_tol)
                ds.merge(i, j)
    classes = sorted(tuple(sorted(s)) for s in ds.subsets())
    return IsoClassPartition(tuple(classes), witnesses)
