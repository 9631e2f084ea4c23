"""Seeded fuzzing of the theorem registry over random rational configurations.

Config ``i`` of a run is generated from its own RNG seeded with
``(seed, i)``, so results do not depend on how indices are split across
worker processes; the summary is folded in index order.
"""

from __future__ import annotations

import logging
import random
from collections import Counter
from fractions import Fraction
from multiprocessing import get_context
from typing import Any, Iterable, Optional

from cevconic.config import build_config
from cevconic.kernel import HPoint
from cevconic.serialize import point_json
from cevconic.theorems import FAILED, HOLDS, NOT_MET, REGISTRY, check_all
from cevconic.triangle import (
    Bary,
    TriangleRef,
    admissible,
    bary_to_point,
    on_median,
    on_steiner_circumellipse,
    steiner_point_from_direction,
)

log = logging.getLogger(__name__)

MODES = ("mixed", "generic", "steiner", "median")
# in mixed mode, index i % 20 picks the branch: 18 generic, 1 steiner, 1 median
_MIXED_CYCLE = ("generic",) * 18 + ("steiner", "median")


def branch_for(mode: str, index: int) -> str:
    if mode == "mixed":
        return _MIXED_CYCLE[index % len(_MIXED_CYCLE)]
    if mode not in MODES:
        raise ValueError(f"unknown fuzz mode {mode!r}")
    return mode


def config_rng(seed: int, index: int) -> random.Random:
    return random.Random(f"cevconic:{seed}:{index}")


def random_triangle(rng: random.Random, bound: int) -> TriangleRef:
    while True:
        pts = [(rng.randint(-bound, bound), rng.randint(-bound, bound)) for _ in range(3)]
        (x1, y1), (x2, y2), (x3, y3) = pts
        if (x2 - x1) * (y3 - y1) - (x3 - x1) * (y2 - y1) != 0:
            return TriangleRef.from_xy(pts)


def _rational(rng: random.Random, bound: int) -> Fraction:
    den = rng.randint(1, bound)
    return Fraction(rng.randint(-bound * den, bound * den), den)


def random_generic_point(rng: random.Random, tri: TriangleRef, bound: int) -> HPoint:
    while True:
        P = HPoint(_rational(rng, bound), _rational(rng, bound))
        if (admissible(tri, P) and P != tri.G and not on_median(tri, P)
                and not on_steiner_circumellipse(tri, P)):
            return P


def random_steiner_point(rng: random.Random, tri: TriangleRef, bound: int) -> HPoint:
    while True:
        u = rng.randint(-bound, bound)
        v = rng.randint(-bound, bound)
        if u == 0 or v == 0 or u + v == 0:
            continue
        d = bary_to_point(tri, Bary(u, v, -u - v))
        P = steiner_point_from_direction(tri, d)
        if admissible(tri, P) and not on_median(tri, P):
            return P


def random_median_point(rng: random.Random, tri: TriangleRef, bound: int) -> HPoint:
    while True:
        t = _rational(rng, bound)
        if t in (0, 1, -1):
            continue
        k = rng.randrange(3)
        coords = [Fraction(1)] * 3
        coords[k] = t
        P = bary_to_point(tri, Bary(*coords))
        if not P.is_infinite and admissible(tri, P) and P != tri.G:
            return P


_GENERATORS = {
    "generic": random_generic_point,
    "steiner": random_steiner_point,
    "median": random_median_point,
}


def generate(seed: int, index: int, bound: int, mode: str = "mixed"):
    """``(branch, triangle, P)`` for config ``index`` of a run."""
    rng = config_rng(seed, index)
    branch = branch_for(mode, index)
    tri = random_triangle(rng, bound)
    return branch, tri, _GENERATORS[branch](rng, tri, bound)


def _run_one(args) -> tuple[int, str, list, Optional[dict]]:
    seed, index, bound, mode = args
    branch, tri, P = generate(seed, index, bound, mode)
    reports = check_all(build_config(tri, P))
    statuses = [(r.id, r.status) for r in reports]
    failure = None
    for r in reports:
        if r.status == FAILED:
            failure = {
                "index": index,
                "branch": branch,
                "triangle": [point_json(v) for v in tri.vertices],
                "point": point_json(P),
                "id": r.id,
                "witness": r.witness,
            }
            break
    return index, branch, statuses, failure


def summarize(results: Iterable[tuple[int, str, list, Optional[dict]]],
              seed: int, count: int, bound: int, mode: str) -> dict[str, Any]:
    counts = {rid: Counter() for rid in REGISTRY}
    branches = Counter()
    first_failure = None
    failed = 0
    for index, branch, statuses, failure in results:
        branches[branch] += 1
        for rid, status in statuses:
            counts[rid][status] += 1
            if status == FAILED:
                failed += 1
        if failure is not None and first_failure is None:
            first_failure = failure
    return {
        "seed": seed,
        "count": count,
        "bound": bound,
        "mode": mode,
        "branches": {b: branches[b] for b in ("generic", "steiner", "median")},
        "counts": {rid: {s: counts[rid][s] for s in (HOLDS, NOT_MET, FAILED)}
                   for rid in REGISTRY},
        "failed": failed,
        "first_failure": first_failure,
    }


def fuzz(seed: int, count: int, bound: int = 10, jobs: int = 1,
         mode: str = "mixed") -> dict[str, Any]:
    """Check ``count`` random configs; ``jobs > 1`` fans out to processes."""
    if count < 0 or bound < 1:
        raise ValueError("count must be >= 0 and bound >= 1")
    branch_for(mode, 0)
    tasks = [(seed, i, bound, mode) for i in range(count)]
    if jobs <= 1 or count == 0:
        results = map(_run_one, tasks)
        return summarize(results, seed, count, bound, mode)
    chunk = max(1, count // (jobs * 8))
    with get_context("spawn").Pool(jobs) as pool:
        # imap preserves task order, so aggregation is identical to jobs=1
        results = pool.imap(_run_one, tasks, chunksize=chunk)
        summary = summarize(results, seed, count, bound, mode)
    log.debug("fuzz finished with %d workers", jobs)
    return summary
