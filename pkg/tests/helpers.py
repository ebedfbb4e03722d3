"""Shared test utilities: independent oracles and instance generators.

The oracles here are deliberately naive (permutation and set-partition
enumeration) so they stay independent of the library's solver paths.
"""

from __future__ import annotations

import itertools
import math
import random

from toursplit import ClosedTour, Instance, Point


def dist(a, b) -> float:
    return math.hypot(a.x - b.x, a.y - b.y)


def brute_force_tour_length(points) -> float:
    """Optimal tour length by enumerating all permutations (n <= 8)."""
    pts = list(points)
    n = len(pts)
    if n == 1:
        return 0.0
    best = math.inf
    for perm in itertools.permutations(range(1, n)):
        order = (0,) + perm
        total = sum(dist(pts[order[i]], pts[order[(i + 1) % n]]) for i in range(n))
        if total < best:
            best = total
    return best


def all_set_partitions(items):
    """Every partition of ``items`` into nonempty blocks, naive recursion."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in all_set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]
        yield [[first]] + part


def brute_force_partition_value(points, k: int) -> float:
    """Min-max partition value by full enumeration (n <= 7)."""
    pts = list(points)
    best = math.inf
    for part in all_set_partitions(list(range(len(pts)))):
        if len(part) > k:
            continue
        worst = max(brute_force_tour_length([pts[i] for i in blk]) for blk in part)
        if worst < best:
            best = worst
    return best


def random_points(rng: random.Random, n: int, scale: float = 1.0) -> list[Point]:
    """Distinct uniform points in a square of the given side."""
    pts: list[Point] = []
    seen = set()
    while len(pts) < n:
        p = Point(rng.random() * scale, rng.random() * scale)
        key = (p.x, p.y)
        if key not in seen:
            seen.add(key)
            pts.append(p)
    return pts


def random_instance(rng: random.Random, n: int, scale: float = 1.0) -> Instance:
    return Instance(tuple(random_points(rng, n, scale)))


def angular_tour(points) -> ClosedTour:
    """A simple polygon through the points: sort by angle around the centroid.

    Valid for points in general position (distinct angles), which holds
    almost surely for continuous random input.
    """
    pts = list(points)
    cx = sum(p.x for p in pts) / len(pts)
    cy = sum(p.y for p in pts) / len(pts)
    pts.sort(key=lambda p: (math.atan2(p.y - cy, p.x - cx), p.x, p.y))
    return ClosedTour(tuple(pts))


def random_simple_tour(rng: random.Random, n: int, scale: float = 1.0) -> ClosedTour:
    return angular_tour(random_points(rng, n, scale))


def _orient(a: Point, b: Point, c: Point) -> float:
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)


def segments_cross(a: Point, b: Point, c: Point, d: Point) -> bool:
    """True when segments ab and cd intersect in their interiors."""
    d1 = _orient(c, d, a)
    d2 = _orient(c, d, b)
    d3 = _orient(a, b, c)
    d4 = _orient(a, b, d)
    return ((d1 > 0) != (d2 > 0)) and ((d3 > 0) != (d4 > 0))


def tour_self_intersects(tour: ClosedTour) -> bool:
    """Check all non-adjacent edge pairs for proper crossings."""
    verts = tour.vertices
    m = len(verts)
    edges = [(verts[i], verts[(i + 1) % m]) for i in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            if j == i + 1 or (i == 0 and j == m - 1):
                continue
            if segments_cross(*edges[i], *edges[j]):
                return True
    return False
