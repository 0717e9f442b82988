"""Index versus linear-scan timing for nearest-magnet queries."""

from __future__ import annotations

import math
import statistics
import time
from dataclasses import dataclass

import numpy as np

from .geometry import Circle, sample_boundary
from .index import build_index, scan_nearest


@dataclass(frozen=True)
class BenchReport:
    magnet_count: int
    query_count: int
    index_median_ns: int
    scan_median_ns: int
    speedup: float
    ids_match: bool


def run_bench(magnet_count: int = 100_000, query_count: int = 10_000, seed: int = 0,
              repetitions: int = 5) -> BenchReport:
    """Time single nearest-magnet queries on a uniformly sampled unit circle.

    Queries are uniform over the open unit disk. Each repetition times every
    query once through the index and once through the scan; the reported
    latency is the median over repetitions of the per-query median.
    """
    if magnet_count < 1000 or query_count < 100:
        raise ValueError("bench needs at least 1000 magnets and 100 queries")
    if repetitions < 5:
        raise ValueError("bench needs at least 5 repetitions")
    magnets = sample_boundary(Circle((0.0, 0.0), 1.0), magnet_count)
    ix = build_index(magnets)
    rng = np.random.default_rng(seed)
    r = 0.999 * np.sqrt(rng.random(query_count))
    a = 2.0 * math.pi * rng.random(query_count)
    queries = list(zip((r * np.cos(a)).tolist(), (r * np.sin(a)).tolist()))
    pts = magnets.points
    clock = time.perf_counter_ns

    ix.nearest(queries[0])
    index_meds, scan_meds = [], []
    ids_match = True
    for rep in range(repetitions):
        t_ix, t_scan = [], []
        for q in queries:
            t0 = clock()
            got = ix.nearest(q)
            t1 = clock()
            ref = scan_nearest(pts, q)
            t2 = clock()
            t_ix.append(t1 - t0)
            t_scan.append(t2 - t1)
            if got.chosen_id != ref.chosen_id or got.distance != ref.distance:
                ids_match = False
        index_meds.append(statistics.median(t_ix))
        scan_meds.append(statistics.median(t_scan))
    ix_ns = int(statistics.median(index_meds))
    scan_ns = int(statistics.median(scan_meds))
    return BenchReport(magnet_count, query_count, ix_ns, scan_ns, scan_ns / ix_ns, ids_match)
