import math

import numpy as np
import pytest

from magforest.geometry import Circle, Location, Polygon, point_location


def star_polygon(rng, n, center=(0.0, 0.0), rmin=0.5, rmax=2.0):
    """Random polygon, simple because it is star-shaped about ``center``."""
    while True:
        t = np.sort(rng.uniform(0, 2 * math.pi, n))
        gaps = np.diff(np.append(t, t[0] + 2 * math.pi))
        # every wedge narrower than pi keeps the center visible from each edge
        if gaps.min() > 1e-3 and gaps.max() < 0.9 * math.pi:
            break
    r = rng.uniform(rmin, rmax, n)
    return Polygon(np.column_stack([center[0] + r * np.cos(t), center[1] + r * np.sin(t)]))


def random_curve(rng):
    if rng.random() < 0.3:
        return Circle(tuple(rng.uniform(-3, 3, 2)), rng.uniform(0.5, 3))
    return star_polygon(rng, int(rng.integers(5, 51)), tuple(rng.uniform(-3, 3, 2)))


def interior_point(curve, rng):
    x0, y0, x1, y1 = curve.bbox()
    while True:
        p = (rng.uniform(x0, x1), rng.uniform(y0, y1))
        if point_location(curve, p) is Location.INTERIOR and p != (0.0, 0.0):
            return p


@pytest.fixture
def rng():
    return np.random.default_rng(20261016)


@pytest.fixture
def unit_square():
    return Polygon([(0, 0), (1, 0), (1, 1), (0, 1)])


@pytest.fixture
def unit_circle():
    return Circle((0, 0), 1)
