"""Regularly spaced points on the unit circle and their exact tour formulas.

Consecutive arcs are the cheapest subsets of a regular circle point set,
which makes balanced arc partitions optimal and yields the closed-form
lower-bound family used by the bounds table.  The checks here verify those
claims exhaustively at small sizes instead of assuming them.

Indices are 1-based at the API boundary (``p_1 .. p_n``); bitmask positions
are 0-based internally.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .exact import CapacityError, Instance, speedup_ratio, tour_values_by_subset
from .geometry import Point

MAX_EXHAUSTIVE_POINTS = 12


class VerificationError(Exception):
    """An exhaustive optimality check failed."""


@dataclass(frozen=True)
class CirclePointSet:
    """``n`` points equally spaced on the unit circle, p_i at angle 2*pi*i/n."""

    n: int
    points: tuple[Point, ...]

    def point(self, i: int) -> Point:
        """1-based accessor for p_i."""
        if not 1 <= i <= self.n:
            raise ValueError(f"index must be in 1..{self.n}, got {i}")
        return self.points[i - 1]

    def instance(self) -> Instance:
        return Instance(self.points)


def circle_points(n: int) -> CirclePointSet:
    if n < 2:
        raise ValueError(f"need at least 2 circle points, got {n}")
    pts = tuple(
        Point(math.cos(2.0 * math.pi * i / n), math.sin(2.0 * math.pi * i / n))
        for i in range(1, n + 1)
    )
    return CirclePointSet(n, pts)


@dataclass(frozen=True)
class ArcSubset:
    """``size`` consecutive points of the n-point circle, starting at ``start``."""

    n: int
    start: int
    size: int

    def __post_init__(self) -> None:
        if not 1 <= self.start <= self.n:
            raise ValueError("start index out of range")
        if not 1 <= self.size <= self.n:
            raise ValueError("arc size out of range")

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple((self.start - 1 + j) % self.n + 1 for j in range(self.size))


def arc_tour_length(n: int, m: int) -> float:
    """Optimal tour length of ``m`` consecutive points of the n-point circle.

    Closed form: walk the arc along its m-1 unit chords and return along the
    spanning chord.  Specializes to the full polygon at m = n.
    """
    if not 1 <= m <= n:
        raise ValueError(f"arc size must be in 1..{n}, got {m}")
    if m == 1:
        return 0.0
    return (m - 1) * 2.0 * math.sin(math.pi / n) + 2.0 * math.sin(math.pi * (m - 1) / n)


def circle_limit_ratio(k: int) -> float:
    """Limit of the balanced k-way circle ratio as the point count grows."""
    if k < 1:
        raise ValueError("k must be at least 1")
    return 1.0 / k + math.sin(math.pi / k) / math.pi


@lru_cache(maxsize=None)
def _subset_values(n: int) -> list[float]:
    if n > MAX_EXHAUSTIVE_POINTS:
        raise CapacityError(
            f"exhaustive circle checks are limited to {MAX_EXHAUSTIVE_POINTS} points, got {n}"
        )
    return tour_values_by_subset(circle_points(n).instance())


def _mask_of(indices: Iterable[int], n: int) -> int:
    mask = 0
    for i in indices:
        if not 1 <= i <= n:
            raise ValueError(f"index must be in 1..{n}, got {i}")
        mask |= 1 << (i - 1)
    return mask


def _indices_of(mask: int, n: int) -> tuple[int, ...]:
    return tuple(i for i in range(1, n + 1) if (mask >> (i - 1)) & 1)


@dataclass(frozen=True)
class ArcOptimalityReport:
    """Outcome of checking one arc against every same-size subset."""

    n: int
    m: int
    arc_value: float
    min_value: float
    min_subset: tuple[int, ...]
    max_value: float
    max_subset: tuple[int, ...]
    subsets_checked: int


def verify_arc_optimality(n: int, m: int, tol: float = 1e-9) -> ArcOptimalityReport:
    """Check that the leading arc is a cheapest m-subset of the n-circle.

    Solves every m-subset exactly and raises VerificationError if any beats
    the arc by more than ``tol``.
    """
    if not 1 <= m <= n:
        raise ValueError(f"arc size must be in 1..{n}, got {m}")
    values = _subset_values(n)
    arc_mask = (1 << m) - 1
    arc_value = values[arc_mask]
    min_value = math.inf
    max_value = -math.inf
    min_mask = max_mask = arc_mask
    checked = 0
    for mask in range(1, 1 << n):
        if bin(mask).count("1") != m:
            continue
        checked += 1
        v = values[mask]
        if v < min_value:
            min_value = v
            min_mask = mask
        if v > max_value:
            max_value = v
            max_mask = mask
    if arc_value > min_value + tol:
        raise VerificationError(
            f"subset {_indices_of(min_mask, n)} of the {n}-circle beats the "
            f"{m}-arc: {min_value} < {arc_value}"
        )
    return ArcOptimalityReport(
        n=n,
        m=m,
        arc_value=arc_value,
        min_value=min_value,
        min_subset=_indices_of(min_mask, n),
        max_value=max_value,
        max_subset=_indices_of(max_mask, n),
        subsets_checked=checked,
    )


def fill_gap_step(
    n: int, subset: Iterable[int], i: int, j: int
) -> tuple[frozenset[int], float]:
    """Move the far end of a gap next to its near end and report the saving.

    ``subset`` must contain p_i and p_j with every point strictly between
    them (going forward from i) absent and at least one point missing.
    Returns the new subset with p_j replaced by p_{i+1} and the exact tour
    saving (old minus new), which is never meaningfully negative.
    """
    members = frozenset(subset)
    if i not in members or j not in members:
        raise ValueError("both gap endpoints must be in the subset")
    gap = (j - i) % n
    if gap < 2:
        raise ValueError("no gap: j must be at least two steps after i")
    for step in range(1, gap):
        between = (i - 1 + step) % n + 1
        if between in members:
            raise ValueError(f"p_{between} lies strictly between p_{i} and p_{j}")
    successor = i % n + 1
    values = _subset_values(n)
    new_members = frozenset(members - {j} | {successor})
    delta = values[_mask_of(members, n)] - values[_mask_of(new_members, n)]
    return new_members, delta


def _is_arc(n: int, members: frozenset[int]) -> bool:
    """True when the members form one run of consecutive circle indices."""
    boundaries = sum(1 for i in members if (i % n) + 1 not in members)
    return boundaries <= 1


def collapse_to_arc(n: int, subset: Iterable[int]) -> tuple[frozenset[int], int]:
    """Repeatedly fill gaps until the subset is a consecutive arc.

    Keeps the lowest member fixed and always fills the first gap after the
    run containing it, so each step extends that run by one point.  Returns
    the final arc and the number of steps taken (at most n).
    """
    members = frozenset(subset)
    if not members:
        raise ValueError("subset must be nonempty")
    anchor = min(members)
    steps = 0
    while not _is_arc(n, members):
        run_end = anchor
        while (run_end % n) + 1 in members:
            run_end = (run_end % n) + 1
        j = (run_end % n) + 1
        while j not in members:
            j = (j % n) + 1
        members, _ = fill_gap_step(n, members, run_end, j)
        steps += 1
        if steps > n:
            raise RuntimeError("gap filling failed to terminate")
    return members, steps


def verify_gap_fill_monotonicity(n: int, tol: float = 1e-9) -> int:
    """Exhaustively check that every valid gap-fill move never costs tour length.

    Runs over all subsets of the n-circle and all valid (i, j) pairs; raises
    VerificationError on any move that increases the exact tour value by
    more than ``tol``.  Returns the number of moves checked.
    """
    values = _subset_values(n)
    moves = 0
    for mask in range(1, 1 << n):
        members = _indices_of(mask, n)
        if len(members) == n or len(members) == 1:
            continue
        member_set = set(members)
        for i in members:
            j = i % n + 1
            gap = 1
            while j not in member_set:
                j = j % n + 1
                gap += 1
            if gap < 2:
                continue
            successor = i % n + 1
            new_mask = mask & ~(1 << (j - 1)) | (1 << (successor - 1))
            delta = values[mask] - values[new_mask]
            moves += 1
            if delta < -tol:
                raise VerificationError(
                    f"gap fill on subset {members} of the {n}-circle (i={i}, j={j}) "
                    f"increased the tour value by {-delta}"
                )
    return moves


def circle_ratio(n: int, k: int) -> float:
    """k-way speedup ratio of the regular n-point circle.

    Uses the balanced-arc closed form when k divides n, otherwise the
    exhaustive partition oracle.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if n < 2:
        raise ValueError(f"need at least 2 circle points, got {n}")
    if n % k == 0:
        return arc_tour_length(n, n // k) / arc_tour_length(n, n)
    return speedup_ratio(circle_points(n).instance(), k)
