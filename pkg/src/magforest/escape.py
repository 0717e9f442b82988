"""Escape paths for a hiker lost inside a curve.

The hiker walks straight to the nearest magnet. ``analytic_escape`` is the
independent check: the exact closest point on the continuous boundary,
computed from segments and circles without touching any magnet.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .geometry import Circle, Curve, Location, Vector, _segment_distances, norm, point_location
from .magnetization import MagnetizedCurve, magnetize, ortho_residual, require_interior


@dataclass(frozen=True)
class EscapePlan:
    hiker: Vector
    exit_id: Optional[int]
    exit_point: Vector
    path: Vector
    length: float
    ortho_residual: float
    tie_count: int


def escape_path(mc: MagnetizedCurve, hiker, strict_origin: bool = True, tie_eps: float = 0.0) -> EscapePlan:
    m = magnetize(mc, hiker, strict_origin, tie_eps)
    return EscapePlan(m.source, m.chosen_id, m.magnet, m.path, m.measure, m.ortho_residual, len(m.ties))


def analytic_escape(c: Curve, hiker, strict_origin: bool = True) -> EscapePlan:
    """Exact nearest boundary point.

    A hiker at a circle's center exits at angle 0. On polygons ties go to
    the first segment in vertex order; ``tie_count`` counts the segments
    reaching the minimum.
    """
    v = require_interior(c, hiker, strict_origin)
    if isinstance(c, Circle):
        off = v - c.center
        r = norm(off)
        if r == 0.0:
            exit_point = c.center + Vector.of(c.radius, 0.0)
        else:
            exit_point = c.center + off * (c.radius / r)
        ties = 1
    else:
        a, b = c.edges()
        d, q = _segment_distances(a, b, np.array(v.coords))
        k = int(np.argmin(d))
        exit_point = Vector(tuple(q[k].tolist()))
        ties = int(np.count_nonzero(d == d[k]))
    path = exit_point - v
    return EscapePlan(v, None, exit_point, path, norm(path), ortho_residual(v, exit_point), ties)


@dataclass(frozen=True)
class ConvergenceReport:
    resolutions: tuple
    measures: tuple
    analytic: float
    errors: tuple


def convergence_study(c: Curve, hiker, resolutions: Sequence[int], strict_origin: bool = True,
                      tie_eps: float = 0.0) -> ConvergenceReport:
    res = [int(r) for r in resolutions]
    if not res or any(r < 3 for r in res) or any(b <= a for a, b in zip(res, res[1:])):
        raise ValueError(f"resolutions must be strictly increasing and >= 3, got {list(resolutions)}")
    exact = analytic_escape(c, hiker, strict_origin).length
    measures = tuple(
        escape_path(MagnetizedCurve.from_curve(c, n), hiker, strict_origin, tie_eps).length for n in res
    )
    return ConvergenceReport(tuple(res), measures, exact, tuple(abs(m - exact) for m in measures))


@dataclass(frozen=True)
class StrategyStats:
    trials: int
    mean_length: float
    stddev: float
    max_length: float
    seed: int


def trial_generator(seed: int, trial: int) -> np.random.Generator:
    """Counter-based stream for one trial: Philox keyed by ``(seed, trial)``."""
    if not 0 <= seed < 2**64:
        raise ValueError("seed must fit in 64 unsigned bits")
    return np.random.Generator(np.random.Philox(key=(trial << 64) | seed))


def sample_interior(c: Curve, rng: np.random.Generator, strict_origin: bool = True) -> Vector:
    """Uniform point of the interior by rejection from the bounding box."""
    x0, y0, x1, y1 = c.bbox()
    while True:
        u = rng.random(2)
        p = Vector.of(x0 + u[0] * (x1 - x0), y0 + u[1] * (y1 - y0))
        if strict_origin and p.is_zero():
            continue
        if point_location(c, p) is Location.INTERIOR:
            return p


def monte_carlo_escape(mc: MagnetizedCurve, trials: int, seed: int, workers: int = 1,
                       strict_origin: bool = True) -> StrategyStats:
    """Escape length statistics over hikers drawn uniformly inside the curve.

    Trial ``i`` draws from its own generator, so the result does not depend
    on ``workers`` or on scheduling.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    lengths = np.empty(trials)

    def run(lo: int, hi: int) -> None:
        for i in range(lo, hi):
            hiker = sample_interior(mc.curve, trial_generator(seed, i), strict_origin)
            lengths[i] = escape_path(mc, hiker, strict_origin).length

    if workers <= 1:
        run(0, trials)
    else:
        step = -(-trials // workers)
        with ThreadPoolExecutor(workers) as pool:
            list(pool.map(lambda lo: run(lo, min(lo + step, trials)), range(0, trials, step)))

    mean = math.fsum(lengths) / trials
    var = math.fsum((lengths - mean) ** 2) / trials
    return StrategyStats(trials, mean, math.sqrt(var), float(lengths.max()), seed)
