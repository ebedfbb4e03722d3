"""Planar primitives: points, directions, closed polygonal tours, hulls, widths.

Everything here is a pure function over immutable values.  Tours carry a
canonical arclength parametrization starting at their first vertex, so a
parameter difference equals the distance travelled along the curve.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass, field
from typing import Iterable, Union


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"point coordinates must be finite, got ({self.x}, {self.y})")

    def distance_to(self, other: "Point") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)


@dataclass(frozen=True)
class Direction:
    """An undirected planar direction, stored as an angle in [0, pi)."""

    theta: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.theta):
            raise ValueError("direction angle must be finite")
        object.__setattr__(self, "theta", self.theta % math.pi)

    @property
    def unit(self) -> tuple[float, float]:
        return (math.cos(self.theta), math.sin(self.theta))

    def orthogonal(self) -> "Direction":
        return Direction(self.theta + math.pi / 2.0)


@dataclass(frozen=True)
class PolyChain:
    """An open polygonal chain (a subpath cut out of a closed tour)."""

    points: tuple[Point, ...]

    @property
    def length(self) -> float:
        total = 0.0
        for a, b in zip(self.points, self.points[1:]):
            total += a.distance_to(b)
        return total


@dataclass(frozen=True)
class ClosedTour:
    """A closed polygonal curve traversed cyclically through its vertices.

    The parametrization starts at ``vertices[0]`` and follows the stored
    vertex order; ``point_at(t)`` walks ``t`` length units along the curve.
    """

    vertices: tuple[Point, ...]
    length: float = field(init=False, compare=False)
    _cum: tuple[float, ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        verts = tuple(
            v if isinstance(v, Point) else Point(v[0], v[1]) for v in self.vertices
        )
        if not verts:
            raise ValueError("a closed tour needs at least one vertex")
        cum = [0.0]
        for i, a in enumerate(verts):
            b = verts[(i + 1) % len(verts)]
            cum.append(cum[-1] + a.distance_to(b))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "length", cum[-1])
        object.__setattr__(self, "_cum", tuple(cum))

    @property
    def vertex_arclengths(self) -> tuple[float, ...]:
        """Arclength position of each vertex, in traversal order."""
        return self._cum[:-1]

    def point_at(self, t: float) -> Point:
        """The point at arclength ``t`` (taken modulo the tour length)."""
        if self.length == 0.0:
            raise ValueError("point_at is undefined on a zero-length tour")
        t = t % self.length
        i = bisect_right(self._cum, t) - 1
        if i >= len(self.vertices):
            i = len(self.vertices) - 1
        a = self.vertices[i]
        b = self.vertices[(i + 1) % len(self.vertices)]
        seg = self._cum[i + 1] - self._cum[i]
        if seg == 0.0:
            return a
        f = (t - self._cum[i]) / seg
        return Point(a.x + f * (b.x - a.x), a.y + f * (b.y - a.y))

    def subcurve(self, t1: float, t2: float) -> PolyChain:
        """The subpath from arclength ``t1`` forward to ``t2``.

        Its arclength is ``(t2 - t1) mod length``; a zero span yields a
        single-point chain.
        """
        if self.length == 0.0:
            raise ValueError("subcurve is undefined on a zero-length tour")
        start = t1 % self.length
        span = (t2 - t1) % self.length
        first = self.point_at(start)
        if span == 0.0:
            return PolyChain((first,))
        interior = []
        for idx, s in enumerate(self._cum[:-1]):
            rel = (s - start) % self.length
            if 0.0 < rel < span:
                interior.append((rel, idx))
        interior.sort()
        pts = [first] + [self.vertices[idx] for _, idx in interior] + [self.point_at(start + span)]
        return PolyChain(tuple(pts))

    def arclength_of(self, pt: Point, tol: float) -> float:
        """Smallest arclength at which ``pt`` lies on the curve, within ``tol``.

        Raises ValueError when the point is farther than ``tol`` from every
        edge.
        """
        m = len(self.vertices)
        for i in range(m):
            a = self.vertices[i]
            b = self.vertices[(i + 1) % m]
            seg = self._cum[i + 1] - self._cum[i]
            if seg == 0.0:
                if pt.distance_to(a) <= tol:
                    return self._cum[i]
                continue
            ax, ay = pt.x - a.x, pt.y - a.y
            bx, by = b.x - a.x, b.y - a.y
            f = (ax * bx + ay * by) / (seg * seg)
            f = 0.0 if f < 0.0 else (1.0 if f > 1.0 else f)
            cx, cy = a.x + f * bx, a.y + f * by
            if math.hypot(pt.x - cx, pt.y - cy) <= tol:
                return self._cum[i] + f * seg
        raise ValueError(f"point ({pt.x}, {pt.y}) does not lie on the tour")


@dataclass(frozen=True)
class Diagonal:
    """A straight segment between two points of a closed tour."""

    p: Point
    q: Point
    t_p: float
    t_q: float

    @property
    def length(self) -> float:
        return self.p.distance_to(self.q)


PointInput = Union[Point, tuple]
Widthable = Union[ClosedTour, Iterable[PointInput]]


def _as_points(obj: Widthable) -> tuple[Point, ...]:
    if isinstance(obj, ClosedTour):
        return obj.vertices
    pts = tuple(p if isinstance(p, Point) else Point(p[0], p[1]) for p in obj)
    if not pts:
        raise ValueError("need at least one point")
    return pts


def _cross(o: Point, a: Point, b: Point) -> float:
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def convex_hull(points: Iterable[PointInput]) -> tuple[Point, ...]:
    """Convex hull vertices in counterclockwise order, strictly convex.

    Duplicate points are dropped.  Collinear input reduces to the two
    extreme points; a single point is returned as is.
    """
    pts = sorted(set((p.x, p.y) if isinstance(p, Point) else (p[0], p[1]) for p in points))
    if not pts:
        raise ValueError("need at least one point")
    pts = [Point(x, y) for x, y in pts]
    if len(pts) <= 2:
        return tuple(pts)
    dx = pts[-1].x - pts[0].x
    ys = [p.y for p in pts]
    eps = 1e-12 * math.hypot(dx, max(ys) - min(ys))
    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= eps:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= eps:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 2:
        # all points collinear after tolerance pruning
        return (pts[0], pts[-1])
    return tuple(hull)


def directional_width(obj: Widthable, direction: Union[Direction, float]) -> float:
    """Extent of the projection onto the given direction."""
    theta = direction.theta if isinstance(direction, Direction) else float(direction)
    ux, uy = math.cos(theta), math.sin(theta)
    projs = [p.x * ux + p.y * uy for p in _as_points(obj)]
    return max(projs) - min(projs)


def min_width(obj: Widthable) -> tuple[float, Direction]:
    """Minimum width over all directions, with an achieving direction.

    The minimum of a convex polygon is attained with a support line flush
    with one of its edges, so only edge-normal directions are examined.
    """
    hull = convex_hull(_as_points(obj))
    if len(hull) == 1:
        return 0.0, Direction(0.0)
    if len(hull) == 2:
        a, b = hull
        along = Direction(math.atan2(b.y - a.y, b.x - a.x))
        return 0.0, along.orthogonal()
    best_w = math.inf
    best_dir = Direction(0.0)
    for i, a in enumerate(hull):
        b = hull[(i + 1) % len(hull)]
        normal = Direction(math.atan2(b.y - a.y, b.x - a.x)).orthogonal()
        w = directional_width(hull, normal)
        if w < best_w:
            best_w = w
            best_dir = normal
    return best_w, best_dir
