"""Exact min-max multi-salesperson tours and guaranteed tour splitting.

Desk-scale exact oracles (optimal tours, optimal k-partitions), the
short-diagonal splitting construction with worst-case ratio guarantees,
closed-form circle lower bounds with exhaustive verification, and a CLI.
"""

from .circle import (
    ArcOptimalityReport,
    ArcSubset,
    CirclePointSet,
    VerificationError,
    arc_tour_length,
    circle_limit_ratio,
    circle_points,
    circle_ratio,
    collapse_to_arc,
    fill_gap_step,
    verify_arc_optimality,
    verify_gap_fill_monotonicity,
)
from .exact import (
    MAX_EXACT_POINTS,
    MAX_PARTITION_POINTS,
    CapacityError,
    Instance,
    Partition,
    SolveResult,
    block_tour,
    optimal_partition,
    optimal_tour,
    speedup_ratio,
    tour_values_by_subset,
)
from .geometry import (
    ClosedTour,
    Diagonal,
    Direction,
    Point,
    PolyChain,
    convex_hull,
    directional_width,
    min_width,
)
from .kernels import BACKEND as SOLVER_BACKEND
from .splitting import (
    BoundsRow,
    ChordSearchError,
    PlanNode,
    SplitPlan,
    SplitResult,
    assign_points,
    bounds_table,
    chord_at_arclength,
    equalizing_fraction,
    guaranteed_partition,
    halve_tour,
    short_diagonal,
    split_plan,
    split_tour,
)

__version__ = "0.1.0"

__all__ = [
    "ArcOptimalityReport",
    "ArcSubset",
    "BoundsRow",
    "CapacityError",
    "ChordSearchError",
    "CirclePointSet",
    "ClosedTour",
    "Diagonal",
    "Direction",
    "Instance",
    "MAX_EXACT_POINTS",
    "MAX_PARTITION_POINTS",
    "Partition",
    "PlanNode",
    "Point",
    "PolyChain",
    "SOLVER_BACKEND",
    "SolveResult",
    "SplitPlan",
    "SplitResult",
    "VerificationError",
    "arc_tour_length",
    "assign_points",
    "block_tour",
    "bounds_table",
    "chord_at_arclength",
    "circle_limit_ratio",
    "circle_points",
    "circle_ratio",
    "collapse_to_arc",
    "convex_hull",
    "directional_width",
    "equalizing_fraction",
    "fill_gap_step",
    "guaranteed_partition",
    "halve_tour",
    "min_width",
    "optimal_partition",
    "optimal_tour",
    "short_diagonal",
    "speedup_ratio",
    "split_plan",
    "split_tour",
    "tour_values_by_subset",
    "verify_arc_optimality",
    "verify_gap_fill_monotonicity",
]
