"""Exact desk-scale oracles: optimal tours, min-max k-partitions, speedup ratios.

The tour solver is a Held-Karp subset dynamic program, exact up to the
stated point budgets.  The k-partition oracle enumerates set partitions as
restricted-growth strings, reusing one tour value per subset, and breaks
ties by the lexicographically smallest labelling so results are stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from . import kernels
from .geometry import ClosedTour, Diagonal, Point

MAX_EXACT_POINTS = 18
MAX_PARTITION_POINTS = 13


class CapacityError(Exception):
    """An instance exceeds an exact-solver budget."""


@dataclass(frozen=True)
class Instance:
    """A set of distinct planar points."""

    points: tuple[Point, ...]

    def __post_init__(self) -> None:
        pts = tuple(
            p if isinstance(p, Point) else Point(p[0], p[1]) for p in self.points
        )
        if not pts:
            raise ValueError("an instance needs at least one point")
        if len(set((p.x, p.y) for p in pts)) != len(pts):
            raise ValueError("instance points must be distinct (use from_points)")
        object.__setattr__(self, "points", pts)

    @classmethod
    def from_points(cls, points: Iterable[Union[Point, tuple]]) -> "Instance":
        """Build an instance, dropping coincident duplicates (order kept)."""
        seen = set()
        keep = []
        for p in points:
            pt = p if isinstance(p, Point) else Point(p[0], p[1])
            key = (pt.x, pt.y)
            if key not in seen:
                seen.add(key)
                keep.append(pt)
        return cls(tuple(keep))

    @property
    def n(self) -> int:
        return len(self.points)

    def distance_matrix(self) -> list[float]:
        """Flat row-major Euclidean distance matrix."""
        pts = self.points
        return [a.distance_to(b) for a in pts for b in pts]


@dataclass(frozen=True)
class Partition:
    """Pairwise-disjoint nonempty point blocks."""

    blocks: tuple[tuple[Point, ...], ...]

    def __post_init__(self) -> None:
        if not self.blocks:
            raise ValueError("a partition needs at least one block")
        seen: set[tuple[float, float]] = set()
        for block in self.blocks:
            if not block:
                raise ValueError("partition blocks must be nonempty")
            for p in block:
                key = (p.x, p.y)
                if key in seen:
                    raise ValueError("partition blocks must be disjoint")
                seen.add(key)

    @property
    def k(self) -> int:
        return len(self.blocks)


@dataclass(frozen=True)
class SolveResult:
    """Tours for each block of a partition and the max tour length."""

    partition: Partition
    tours: tuple[ClosedTour, ...]
    value: float
    diagonals: tuple[Diagonal, ...] = ()
    labels: Optional[tuple[int, ...]] = None


def optimal_tour(instance: Instance) -> ClosedTour:
    """Minimum-length closed tour through all instance points.

    Degenerate sizes are honored: a single point yields a zero-length tour
    and two points an out-and-back tour of twice their distance.
    """
    n = instance.n
    if n > MAX_EXACT_POINTS:
        raise CapacityError(
            f"exact tours are limited to {MAX_EXACT_POINTS} points, got {n}"
        )
    if n == 1:
        return ClosedTour(instance.points)
    _, order = kernels.shortest_cycle(instance.distance_matrix(), n)
    return ClosedTour(tuple(instance.points[i] for i in order))


def tour_values_by_subset(instance: Instance) -> list[float]:
    """Optimal tour length for every subset of the points, by bitmask."""
    n = instance.n
    if n > MAX_PARTITION_POINTS:
        raise CapacityError(
            f"subset tables are limited to {MAX_PARTITION_POINTS} points, got {n}"
        )
    return kernels.cycle_lengths_by_subset(instance.distance_matrix(), n)


def optimal_partition(instance: Instance, k: int) -> SolveResult:
    """Partition into at most ``k`` blocks minimizing the longest block tour.

    Every partition is considered, so this is exact; the search reuses one
    precomputed tour value per subset.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    n = instance.n
    if n > MAX_PARTITION_POINTS:
        raise CapacityError(
            f"partition enumeration is limited to {MAX_PARTITION_POINTS} points, got {n}"
        )
    values = tour_values_by_subset(instance)
    _, labels = kernels.min_max_partition(values, n, min(k, n))
    block_count = max(labels) + 1
    blocks: list[list[Point]] = [[] for _ in range(block_count)]
    for idx, lab in enumerate(labels):
        blocks[lab].append(instance.points[idx])
    tours = tuple(optimal_tour(Instance(tuple(block))) for block in blocks)
    value = max(t.length for t in tours)
    return SolveResult(
        partition=Partition(tuple(tuple(b) for b in blocks)),
        tours=tours,
        value=value,
        labels=tuple(labels),
    )


def speedup_ratio(instance: Instance, k: int) -> float:
    """Best-possible k-way time divided by the single-tour optimum, in (0, 1]."""
    tour = optimal_tour(instance)
    if tour.length == 0.0:
        raise ValueError("ratio undefined: optimal tour has zero length")
    return optimal_partition(instance, k).value / tour.length


def block_tour(
    points: Sequence[Union[Point, tuple]],
    strategy: str = "exact",
    inherited: Optional[ClosedTour] = None,
) -> ClosedTour:
    """Tour for one block: solved exactly, or an inherited tour passed through."""
    if strategy == "exact":
        return optimal_tour(Instance.from_points(points))
    if strategy == "inherited":
        if inherited is None:
            raise ValueError("inherited strategy requires a tour")
        return inherited
    raise ValueError(f"unknown strategy: {strategy!r}")
