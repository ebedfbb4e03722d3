"""Command-line front end.

Subcommands: ``tsp`` (optimal tour), ``split`` (k-way partition, exact or
guaranteed), ``bounds`` (ratio bounds CSV), ``circle`` (circle ratios and
exhaustive verification), ``gen`` (seeded instances), ``plot`` (SVG).

Exit codes: 0 ok, 2 input error, 3 capacity exceeded, 4 verification
failure.  All randomness flows through the single --seed flag.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Optional, Sequence

from .circle import (
    VerificationError,
    circle_limit_ratio,
    circle_ratio,
    verify_arc_optimality,
    verify_gap_fill_monotonicity,
)
from .exact import CapacityError, Instance, optimal_partition, optimal_tour
from .geometry import ClosedTour, Point
from .splitting import bounds_table, guaranteed_partition, split_plan
from .svgout import render_svg

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CAPACITY = 3
EXIT_VERIFY = 4


class InputError(Exception):
    """Bad input file, document, or argument value."""


def parse_instance_text(text: str, source: str = "<input>") -> list[Point]:
    """Parse "x y" lines; blank lines and '#' comments are ignored."""
    points = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise InputError(f"{source}, line {lineno}: expected two numbers, got {raw!r}")
        try:
            x, y = float(fields[0]), float(fields[1])
            pt = Point(x, y)
        except ValueError as exc:
            raise InputError(f"{source}, line {lineno}: {exc}") from exc
        points.append(pt)
    if not points:
        raise InputError(f"{source}: no points found")
    return points


def format_instance(points: Sequence[Point]) -> str:
    """Serialize points in the instance file format (full float precision)."""
    return "".join(f"{p.x!r} {p.y!r}\n" for p in points)


def _read_instance(path: str) -> Instance:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    return Instance.from_points(parse_instance_text(text, source=path))


def _write_text(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
    except OSError as exc:
        raise InputError(f"cannot write {out}: {exc}") from exc


def _bounding_box(points: Sequence[Point]) -> list[float]:
    xs = [p.x for p in points]
    ys = [p.y for p in points]
    return [min(xs), min(ys), max(xs), max(ys)]


def _tour_coords(tour: ClosedTour) -> list[list[float]]:
    return [[v.x, v.y] for v in tour.vertices]


def _result_document(
    command: str,
    path: str,
    instance: Instance,
    blocks: Sequence[Sequence[Point]],
    tours: Sequence[ClosedTour],
    value: float,
    optimal_length: Optional[float],
    guarantee: Optional[float],
    diagonals: Sequence = (),
    extra: Optional[dict] = None,
) -> dict:
    doc = {
        "command": command,
        "input": path,
        "instance": {"n": instance.n, "bounding_box": _bounding_box(instance.points)},
        "value": value,
        "optimal_length": optimal_length,
        "ratio": (value / optimal_length) if optimal_length else None,
        "guarantee": guarantee,
        "blocks": [
            {
                "points": [[p.x, p.y] for p in block],
                "tour": _tour_coords(tour),
                "length": tour.length,
            }
            for block, tour in zip(blocks, tours)
        ],
        "diagonals": [
            [[d.p.x, d.p.y], [d.q.x, d.q.y]] for d in diagonals
        ],
    }
    if extra:
        doc.update(extra)
    return doc


def _emit_document(doc: dict, out: Optional[str]) -> None:
    _write_text(json.dumps(doc, indent=2) + "\n", out)


def cmd_tsp(args: argparse.Namespace) -> int:
    instance = _read_instance(args.input)
    tour = optimal_tour(instance)
    doc = _result_document(
        command="tsp",
        path=args.input,
        instance=instance,
        blocks=[instance.points],
        tours=[tour],
        value=tour.length,
        optimal_length=tour.length,
        guarantee=None,
    )
    _emit_document(doc, args.out)
    return EXIT_OK


def cmd_split(args: argparse.Namespace) -> int:
    instance = _read_instance(args.input)
    if args.strategy == "guaranteed":
        tour = optimal_tour(instance)
        result = guaranteed_partition(instance, tour, args.k)
        plan = split_plan(args.k)
        extra = {"k": args.k, "strategy": "guaranteed", "bound": plan.ratio * tour.length}
        guarantee = plan.ratio
        optimal_length = tour.length
    else:
        result = optimal_partition(instance, args.k)
        optimal_length = optimal_tour(instance).length
        extra = {"k": args.k, "strategy": "exact", "bound": None}
        guarantee = None
    doc = _result_document(
        command="split",
        path=args.input,
        instance=instance,
        blocks=result.partition.blocks,
        tours=result.tours,
        value=result.value,
        optimal_length=optimal_length,
        guarantee=guarantee,
        diagonals=result.diagonals,
        extra=extra,
    )
    _emit_document(doc, args.out)
    return EXIT_OK


def cmd_bounds(args: argparse.Namespace) -> int:
    lines = ["k,lower,upper,decomposition"]
    for row in bounds_table(args.k_max):
        lines.append(f"{row.k},{row.lower:.6f},{row.upper:.6f},{row.decomposition}")
    _write_text("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_circle(args: argparse.Namespace) -> int:
    gamma = circle_ratio(args.n, args.k)
    lines = [
        f"circle n={args.n} k={args.k}",
        f"gamma_circle {gamma:.6f}",
        f"lb_gamma {circle_limit_ratio(args.k):.6f}",
    ]
    if args.verify:
        reports = [verify_arc_optimality(args.n, m) for m in range(1, args.n + 1)]
        subsets = sum(r.subsets_checked for r in reports)
        lines.append(
            f"arc_optimality n={args.n}: pass (m=1..{args.n}, {subsets} subsets)"
        )
        moves = verify_gap_fill_monotonicity(args.n)
        lines.append(f"gap_fill_monotonicity n={args.n}: pass ({moves} moves)")
    _write_text("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    rng = random.Random(args.seed)
    points = [Point(rng.random(), rng.random()) for _ in range(args.n)]
    _write_text(format_instance(points), args.out)
    return EXIT_OK


def cmd_plot(args: argparse.Namespace) -> int:
    try:
        with open(args.result, "r", encoding="utf-8") as handle:
            doc = json.load(handle)
    except OSError as exc:
        raise InputError(f"cannot read {args.result}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{args.result}: not valid JSON: {exc}") from exc
    try:
        svg = render_svg(doc)
    except ValueError as exc:
        raise InputError(f"{args.result}: {exc}") from exc
    _write_text(svg, args.svg)
    return EXIT_OK


def _positive_int(value: str) -> int:
    n = int(value)
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toursplit",
        description="Exact min-max multi-salesperson tours and guaranteed tour splitting.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_tsp = sub.add_parser("tsp", help="solve one optimal tour")
    p_tsp.add_argument("input", help="instance file with 'x y' lines")
    p_tsp.add_argument("--out", help="write the result document here instead of stdout")
    p_tsp.set_defaults(func=cmd_tsp)

    p_split = sub.add_parser("split", help="partition into k tours")
    p_split.add_argument("input", help="instance file with 'x y' lines")
    p_split.add_argument("-k", type=_positive_int, required=True, help="number of salespeople")
    p_split.add_argument(
        "--strategy",
        choices=("exact", "guaranteed"),
        default="guaranteed",
        help="exhaustive oracle or the guaranteed-ratio splitter",
    )
    p_split.add_argument("--out", help="write the result document here instead of stdout")
    p_split.set_defaults(func=cmd_split)

    p_bounds = sub.add_parser("bounds", help="worst-case ratio bounds table as CSV")
    p_bounds.add_argument("k_max", type=_positive_int)
    p_bounds.add_argument("--out", help="write the CSV here instead of stdout")
    p_bounds.set_defaults(func=cmd_bounds)

    p_circle = sub.add_parser("circle", help="regular-circle ratios and verification")
    p_circle.add_argument("-n", type=_positive_int, required=True, help="number of circle points")
    p_circle.add_argument("-k", type=_positive_int, required=True, help="number of salespeople")
    p_circle.add_argument(
        "--verify",
        action="store_true",
        help="exhaustively check arc optimality and gap-fill monotonicity",
    )
    p_circle.add_argument("--out", help="write the report here instead of stdout")
    p_circle.set_defaults(func=cmd_circle)

    p_gen = sub.add_parser("gen", help="generate a seeded uniform instance")
    p_gen.add_argument("-n", type=_positive_int, required=True, help="number of points")
    p_gen.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    p_gen.add_argument("--out", help="write the instance here instead of stdout")
    p_gen.set_defaults(func=cmd_gen)

    p_plot = sub.add_parser("plot", help="render a result document as SVG")
    p_plot.add_argument("result", help="result document produced by tsp or split")
    p_plot.add_argument("--svg", required=True, help="output SVG path")
    p_plot.set_defaults(func=cmd_plot)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapacityError as exc:
        print(f"capacity: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
