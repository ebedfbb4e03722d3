"""Exact oracles: optimal tours, min-max partitions, speedup ratios."""

import math
import random

import pytest

from helpers import (
    brute_force_partition_value,
    brute_force_tour_length,
    random_instance,
    tour_self_intersects,
)
from toursplit import (
    CapacityError,
    ClosedTour,
    Instance,
    Point,
    block_tour,
    optimal_partition,
    optimal_tour,
    speedup_ratio,
)

SIN_PI_8 = math.sin(math.pi / 8)
SIN_3PI_8 = math.sin(3 * math.pi / 8)


def square_instance() -> Instance:
    return Instance.from_points([(0, 0), (1, 0), (1, 1), (0, 1)])


def circle_instance(n: int) -> Instance:
    return Instance.from_points(
        [
            (math.cos(2 * math.pi * i / n), math.sin(2 * math.pi * i / n))
            for i in range(1, n + 1)
        ]
    )


class TestInstance:
    def test_deduplicates_coincident_points(self):
        inst = Instance.from_points([(0, 0), (1, 1), (0, 0), (1, 1)])
        assert inst.n == 2

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            Instance.from_points([])

    def test_duplicates_never_change_the_tour(self):
        rng = random.Random(7)
        inst = random_instance(rng, 6)
        doubled = Instance.from_points(inst.points + inst.points)
        assert optimal_tour(doubled).length == optimal_tour(inst).length


class TestOptimalTour:
    def test_unit_square(self):
        assert optimal_tour(square_instance()).length == pytest.approx(4.0)

    def test_equilateral_triangle(self):
        inst = Instance.from_points([(0, 0), (1, 0), (0.5, math.sqrt(3) / 2)])
        assert optimal_tour(inst).length == pytest.approx(3.0)

    def test_regular_octagon(self):
        # closed form 16 sin(pi/8); cross-checked against permutation brute force
        tour = optimal_tour(circle_instance(8))
        assert tour.length == pytest.approx(16 * SIN_PI_8, abs=1e-9)
        assert tour.length == pytest.approx(
            brute_force_tour_length(circle_instance(8).points), abs=1e-9
        )

    def test_degenerate_sizes(self):
        assert optimal_tour(Instance.from_points([(3, 7)])).length == 0.0
        two = optimal_tour(Instance.from_points([(0, 0), (2, 0)]))
        assert two.length == pytest.approx(4.0)

    def test_capacity_error_over_budget(self):
        rng = random.Random(1)
        with pytest.raises(CapacityError):
            optimal_tour(random_instance(rng, 19))

    def test_matches_brute_force_on_random_instances(self):
        rng = random.Random(12345)
        for _ in range(40):
            inst = random_instance(rng, rng.randint(2, 8))
            assert optimal_tour(inst).length == pytest.approx(
                brute_force_tour_length(inst.points), abs=1e-9
            )

    def test_optimal_tours_are_simple(self):
        rng = random.Random(99)
        for _ in range(60):
            inst = random_instance(rng, rng.randint(4, 10))
            assert not tour_self_intersects(optimal_tour(inst))


class TestOptimalPartition:
    def test_two_far_clusters(self):
        inst = Instance.from_points([(0, 0), (0, 0.1), (100, 0), (100, 0.1)])
        result = optimal_partition(inst, 2)
        assert result.value == pytest.approx(0.2)
        blocks = {frozenset((p.x, p.y) for p in b) for b in result.partition.blocks}
        assert blocks == {
            frozenset({(0.0, 0.0), (0.0, 0.1)}),
            frozenset({(100.0, 0.0), (100.0, 0.1)}),
        }

    def test_k1_equals_single_tour(self):
        rng = random.Random(2)
        for _ in range(10):
            inst = random_instance(rng, rng.randint(2, 8))
            assert optimal_partition(inst, 1).value == pytest.approx(
                optimal_tour(inst).length, abs=1e-12
            )

    def test_octagon_two_arcs(self):
        result = optimal_partition(circle_instance(8), 2)
        expected = 6 * SIN_PI_8 + 2 * SIN_3PI_8
        assert result.value == pytest.approx(expected, abs=1e-9)
        assert result.value == pytest.approx(
            brute_force_partition_value(circle_instance(8).points, 2), abs=1e-9
        )
        sizes = sorted(len(b) for b in result.partition.blocks)
        assert sizes == [4, 4]

    def test_matches_brute_force(self):
        rng = random.Random(3)
        for _ in range(12):
            inst = random_instance(rng, rng.randint(2, 7))
            k = rng.randint(1, inst.n)
            assert optimal_partition(inst, k).value == pytest.approx(
                brute_force_partition_value(inst.points, k), abs=1e-9
            )

    def test_monotone_in_k(self):
        rng = random.Random(4)
        for _ in range(15):
            inst = random_instance(rng, rng.randint(2, 8))
            values = [optimal_partition(inst, k).value for k in range(1, inst.n + 1)]
            for a, b in zip(values, values[1:]):
                assert b <= a + 1e-12

    def test_all_singletons_cost_nothing(self):
        rng = random.Random(5)
        inst = random_instance(rng, 7)
        result = optimal_partition(inst, inst.n)
        assert result.value == 0.0
        assert all(len(b) == 1 for b in result.partition.blocks)

    def test_blocks_partition_the_instance(self):
        rng = random.Random(6)
        for _ in range(10):
            inst = random_instance(rng, rng.randint(2, 9))
            k = rng.randint(1, 4)
            result = optimal_partition(inst, k)
            assert len(result.partition.blocks) <= k
            covered = [p for b in result.partition.blocks for p in b]
            assert sorted((p.x, p.y) for p in covered) == sorted(
                (p.x, p.y) for p in inst.points
            )
            assert result.value == pytest.approx(
                max(t.length for t in result.tours), abs=1e-12
            )

    def test_capacity_error_over_budget(self):
        rng = random.Random(8)
        with pytest.raises(CapacityError):
            optimal_partition(random_instance(rng, 14), 2)

    def test_rejects_bad_k(self):
        with pytest.raises(ValueError):
            optimal_partition(square_instance(), 0)


class TestSpeedupRatio:
    def test_k1_is_one(self):
        rng = random.Random(9)
        inst = random_instance(rng, 6)
        assert speedup_ratio(inst, 1) == pytest.approx(1.0, abs=1e-12)

    def test_octagon_two_ways(self):
        assert speedup_ratio(circle_instance(8), 2) == pytest.approx(
            0.6767766952966369, abs=1e-9
        )

    def test_far_clusters_tiny_ratio(self):
        inst = Instance.from_points([(0, 0), (0, 0.1), (100, 0), (100, 0.1)])
        ratio = speedup_ratio(inst, 2)
        assert ratio == pytest.approx(0.2 / optimal_tour(inst).length, abs=1e-12)
        assert ratio < 0.001

    def test_coincident_points_rejected(self):
        inst = Instance.from_points([(1, 1), (1, 1), (1, 1)])
        assert inst.n == 1
        with pytest.raises(ValueError):
            speedup_ratio(inst, 2)

    def test_always_in_unit_interval(self):
        # singleton-only partitions (k >= n) legitimately reach ratio 0
        rng = random.Random(10)
        for _ in range(10):
            inst = random_instance(rng, rng.randint(2, 8))
            k = rng.randint(1, inst.n)
            ratio = speedup_ratio(inst, k)
            assert 0.0 <= ratio <= 1.0 + 1e-12
            if k < inst.n:
                assert ratio > 0.0


class TestBlockTour:
    def test_singleton_zero_length(self):
        assert block_tour([Point(5, 5)]).length == 0.0

    def test_pair_out_and_back(self):
        assert block_tour([Point(0, 0), Point(0, 3)]).length == pytest.approx(6.0)

    def test_square_exact(self):
        assert block_tour(square_instance().points).length == pytest.approx(4.0)

    def test_inherited_passthrough(self):
        tour = ClosedTour((Point(0, 0), Point(1, 0)))
        assert block_tour([Point(0.5, 0)], "inherited", inherited=tour) is tour

    def test_inherited_requires_tour(self):
        with pytest.raises(ValueError):
            block_tour([Point(0, 0)], "inherited")

    def test_unknown_strategy(self):
        with pytest.raises(ValueError):
            block_tour([Point(0, 0)], "annealing")
