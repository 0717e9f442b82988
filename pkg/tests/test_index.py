import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_curve
from magforest.errors import DimensionError
from magforest.geometry import Circle, MagnetSet, sample_boundary
from magforest.index import (
    build_index,
    epsilon_field_members,
    nearest_magnet,
    scan_field,
    scan_nearest,
)


@pytest.fixture(scope="module")
def circle360():
    return build_index(sample_boundary(Circle((0, 0), 1), 360))


def test_small_index_counts(unit_circle):
    ix = build_index(sample_boundary(unit_circle, 4))
    assert sorted(i for chunk in ix.chunks for i in chunk) == [0, 1, 2, 3]


def test_minimal_three_magnet_set():
    m = MagnetSet([(0, 0), (1, 0), (0, 1)])
    ix = build_index(m)
    assert nearest_magnet(ix, (0.9, 0.1)).chosen_id == 1
    assert epsilon_field_members(ix, (0, 0), 1.0) == {0, 1, 2}


def test_every_id_in_exactly_one_chunk():
    m = sample_boundary(Circle((1, 2), 3), 1001)
    ids = [i for chunk in build_index(m).chunks for i in chunk]
    assert sorted(ids) == list(range(1001))


def test_nearest_radial(circle360):
    r = nearest_magnet(circle360, (0.25, 0), 0.0)
    assert (r.chosen_id, r.distance, r.ties) == (0, 0.75, (0,))


def test_nearest_center_ties(circle360):
    r = nearest_magnet(circle360, (0, 0), 1e-12)
    assert r.distance == pytest.approx(1.0, abs=1e-15)
    assert len(r.ties) == 360
    assert r.chosen_id == 0


def test_nearest_requires_planar_query(circle360):
    with pytest.raises(DimensionError):
        nearest_magnet(circle360, (0, 0, 0))


def test_field_examples(unit_circle):
    ix = build_index(sample_boundary(unit_circle, 4))
    assert epsilon_field_members(ix, (1, 0), 1.5) == {0, 1, 3}
    assert epsilon_field_members(ix, (1, 0), 0) == {0}


def _assert_same(ix, pts, probes, tie_eps=0.0, eps=None):
    for v in probes:
        assert nearest_magnet(ix, v, tie_eps) == scan_nearest(pts, v, tie_eps)
        if eps is not None:
            assert epsilon_field_members(ix, v, eps) == scan_field(pts, v, eps)


def test_random_magnets_match_scan(rng):
    pts = rng.uniform(-1, 1, size=(100, 2))
    ix = build_index(MagnetSet(pts))
    _assert_same(ix, pts, rng.uniform(-1.5, 1.5, size=(100, 2)), eps=0.3)


def test_large_circle_matches_scan(rng):
    m = sample_boundary(Circle((0, 0), 1), 100_000)
    ix = build_index(m)
    r = np.sqrt(rng.random(1000))
    a = rng.uniform(0, 2 * math.pi, 1000)
    _assert_same(ix, m.points, np.column_stack([r * np.cos(a), r * np.sin(a)]))


def test_oracle_equivalence_over_random_sets(rng):
    for trial in range(1000):
        if trial % 3 == 0:
            pts = rng.uniform(-5, 5, size=(int(rng.integers(3, 300)), 2))
            m = MagnetSet(pts)
        else:
            m = sample_boundary(random_curve(rng), int(rng.integers(3, 600)), float(rng.random()))
            pts = m.points
        ix = build_index(m, chunk_size=int(rng.integers(1, 40)) if trial % 2 else None)
        v = rng.uniform(-6, 6, 2)
        eps = float(rng.uniform(0, 3))
        _assert_same(ix, pts, [v], tie_eps=float(rng.choice([0.0, 1e-12, 1e-3])), eps=eps)


def test_query_on_a_magnet(rng):
    m = sample_boundary(Circle((0, 0), 1), 64)
    ix = build_index(m)
    for i in (0, 17, 63):
        r = nearest_magnet(ix, m.points[i])
        assert (r.chosen_id, r.distance) == (i, 0.0)
        assert i in epsilon_field_members(ix, m.points[i], 0.0)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1), st.floats(0, 4), st.floats(0, 4))
def test_field_monotone_in_eps(seed, e1, e2):
    rng = np.random.default_rng(seed)
    m = sample_boundary(random_curve(rng), int(rng.integers(3, 500)))
    ix = build_index(m)
    v = rng.uniform(-4, 4, 2)
    lo, hi = sorted((e1, e2))
    assert epsilon_field_members(ix, v, lo) <= epsilon_field_members(ix, v, hi)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_layout_order_never_changes_answers(seed):
    rng = np.random.default_rng(seed)
    m = sample_boundary(random_curve(rng), int(rng.integers(3, 400)))
    base = build_index(m)
    shuffled = build_index(m, order=rng.permutation(len(m)))
    for v in rng.uniform(-4, 4, size=(10, 2)):
        for tie in (0.0, 1e-9, 0.05):
            assert shuffled.nearest(v, tie) == base.nearest(v, tie)
        assert shuffled.field(v, 1.0) == base.field(v, 1.0)


def test_layout_order_symmetric_ties():
    # the center of a regular sampling ties every magnet; a scrambled layout still picks id 0
    m = sample_boundary(Circle((0, 0), 1), 360)
    ix = build_index(m, order=np.random.default_rng(5).permutation(360))
    assert ix.nearest((0, 0), 1e-12).chosen_id == 0


def test_bad_arguments(circle360):
    with pytest.raises(ValueError):
        circle360.nearest((0, 0), -1)
    with pytest.raises(ValueError):
        circle360.field((0, 0), -1)
    with pytest.raises(ValueError):
        build_index(sample_boundary(Circle((0, 0), 1), 5), order=[0, 0, 1, 2, 3])
