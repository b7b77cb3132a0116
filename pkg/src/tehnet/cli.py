"""Command-line front end with deterministic, scriptable output.

Every command writes its whole result to stdout in one piece (never a
partial document on error) and two runs with identical arguments produce
byte-identical output.  Exit codes: 0 success, 1 usage error or failed
self-check, 2 domain error, 3 resource limit.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from pathlib import Path
from typing import IO, Sequence

from .errors import ClosedFormApproximationWarning, ResourceLimitError, TehnetError
from .metrics import (
    METRICS_CSV_HEADER,
    DiameterConvention,
    link_count_simple,
    metrics_csv_line,
    metrics_report,
)
from .reliability import (
    monte_carlo_connectivity,
    reliability_table,
    render_reliability_csv,
    render_reliability_text,
)
from .routing import Path as RoutePath
from .routing import route
from .selfcheck import self_check
from .tables import (
    ScalingMode,
    render_comparison_csv,
    render_comparison_json,
    render_comparison_text,
    scaling_csv,
    scaling_sequence,
    table1_rows,
    table2_rows,
    table3_grid,
)
from .topology import (
    DEFAULT_NODE_CAP,
    Family,
    NetworkSpec,
    NodeAddress,
    build_graph,
    export_topology,
    validate_spec,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_RESOURCE = 3

_CONVENTIONS = {
    "exact": DiameterConvention.EXACT,
    "square": DiameterConvention.SQUARE_APPROX,
    "paper": DiameterConvention.SQUARE_APPROX,
}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(message)


def _add_spec_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--family", choices=[f.value for f in Family], required=True
    )
    parser.add_argument("--l", type=int, dest="rows", help="torus rows")
    parser.add_argument("--m", type=int, dest="cols", help="torus columns")
    parser.add_argument(
        "--cube", type=int, dest="cube_nodes", help="hypercube node count"
    )


def _add_common_arguments(
    parser: argparse.ArgumentParser, convention_default: str = "exact"
) -> None:
    parser.add_argument("--format", choices=["csv", "json", "text"], default="text")
    parser.add_argument(
        "--convention", choices=sorted(_CONVENTIONS), default=convention_default
    )
    parser.add_argument(
        "--max-nodes", type=int, default=DEFAULT_NODE_CAP, dest="max_nodes"
    )


def _spec_from_args(args: argparse.Namespace) -> NetworkSpec:
    family = Family(args.family)
    if family is Family.HYPERCUBE:
        if args.cube_nodes is None:
            raise _UsageError("hypercube requires --cube")
        if args.rows is not None or args.cols is not None:
            raise _UsageError("hypercube takes --cube only, not --l/--m")
        return validate_spec(family, 1, 1, args.cube_nodes)
    if family is Family.TORUS:
        if args.rows is None or args.cols is None:
            raise _UsageError("torus requires --l and --m")
        if args.cube_nodes is not None:
            raise _UsageError("torus takes --l/--m only, not --cube")
        return validate_spec(family, args.rows, args.cols, 1)
    if args.rows is None or args.cols is None or args.cube_nodes is None:
        raise _UsageError("teh requires --l, --m, and --cube")
    return validate_spec(family, args.rows, args.cols, args.cube_nodes)


def _parse_address(text: str, flag: str) -> NodeAddress:
    parts = text.split(",")
    if len(parts) != 3:
        raise _UsageError(f"{flag} must be three comma-separated integers, got {text!r}")
    try:
        row, col, cube = (int(part) for part in parts)
    except ValueError:
        raise _UsageError(
            f"{flag} must be three comma-separated integers, got {text!r}"
        ) from None
    return NodeAddress(row, col, cube)


def _parse_spec_triple(text: str) -> NetworkSpec:
    parts = text.split(",")
    if len(parts) != 3:
        raise _UsageError(f"--spec must be l,m,N, got {text!r}")
    try:
        rows, cols, cube_nodes = (int(part) for part in parts)
    except ValueError:
        raise _UsageError(f"--spec must be l,m,N, got {text!r}") from None
    return validate_spec(Family.TEH, rows, cols, cube_nodes)


def _cube_bits(spec: NetworkSpec, cube: int) -> str:
    width = max(spec.cube_dim, 1)
    return format(cube, f"0{width}b")


def _cmd_metrics(args: argparse.Namespace) -> str:
    spec = _spec_from_args(args)
    convention = _CONVENTIONS[args.convention]
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ClosedFormApproximationWarning)
        report = metrics_report(spec, convention)
    if args.format == "csv":
        return f"{METRICS_CSV_HEADER}\n{metrics_csv_line(report)}\n"
    if args.format == "json":
        return json.dumps(report.to_json_dict(), indent=2) + "\n"
    lines = [f"{key}: {value}" for key, value in report.to_json_dict().items()]
    if spec.has_torus_part and (spec.rows < 3 or spec.cols < 3):
        lines.append(
            f"note: links counts coincident ring links twice; the simple "
            f"graph has {link_count_simple(spec)}"
        )
    return "\n".join(lines) + "\n"


def _route_csv(path: RoutePath) -> str:
    lines = ["step,move,i,j,k"]
    lines.append(f"0,,{path.hops[0].row},{path.hops[0].col},{path.hops[0].cube}")
    for step, (move, hop) in enumerate(zip(path.moves, path.hops[1:]), start=1):
        lines.append(f"{step},{move.label},{hop.row},{hop.col},{hop.cube}")
    return "\n".join(lines) + "\n"


def _route_text(path: RoutePath) -> str:
    spec = path.spec
    lines = [
        f"route {spec.label()}: {path.hops[0]} -> {path.hops[-1]} "
        f"length {path.length}"
    ]
    lines.append(f"start {path.hops[0]} [k={_cube_bits(spec, path.hops[0].cube)}]")
    for step, (move, hop) in enumerate(zip(path.moves, path.hops[1:]), start=1):
        lines.append(
            f"{step}. {move.label} -> {hop} [k={_cube_bits(spec, hop.cube)}]"
        )
    return "\n".join(lines) + "\n"


def _cmd_route(args: argparse.Namespace) -> str:
    spec = _spec_from_args(args)
    src = _parse_address(args.src, "--from")
    dst = _parse_address(args.dst, "--to")
    path = route(spec, src, dst)
    if args.format == "json":
        return json.dumps(path.to_json_dict(), indent=2) + "\n"
    if args.format == "csv":
        return _route_csv(path)
    return _route_text(path)


def _cmd_table(args: argparse.Namespace) -> str:
    convention = _CONVENTIONS[args.convention]
    if args.id == 3:
        grid = table3_grid()
        specs, rows = list(grid.specs), list(grid.rows)
        if args.format == "csv":
            return render_reliability_csv(specs, rows)
        if args.format == "json":
            doc = {
                "specs": [spec.label() for spec in specs],
                "rows": [
                    {"failures": row.failures, "cells": list(row.cells)}
                    for row in rows
                ],
            }
            return json.dumps(doc, indent=2) + "\n"
        return render_reliability_text(specs, rows)
    rows = table1_rows() if args.id == 1 else table2_rows(convention)
    if args.format == "csv":
        return render_comparison_csv(rows)
    if args.format == "json":
        return render_comparison_json(rows)
    return render_comparison_text(rows)


def _cmd_reliability(args: argparse.Namespace) -> str:
    if args.specs:
        specs = [_parse_spec_triple(text) for text in args.specs]
    else:
        specs = [_parse_spec_triple(text) for text in ("4,4,8", "4,4,16", "4,4,32", "4,4,64")]
    rows = reliability_table(specs, args.f_max)
    if args.format == "csv":
        return render_reliability_csv(specs, rows)
    if args.format == "json":
        doc = {
            "f_max": args.f_max,
            "specs": [spec.label() for spec in specs],
            "rows": [
                {"failures": row.failures, "cells": list(row.cells)} for row in rows
            ],
        }
        return json.dumps(doc, indent=2) + "\n"
    return render_reliability_text(specs, rows)


def _cmd_simulate(args: argparse.Namespace) -> str:
    spec = _spec_from_args(args)
    estimate = monte_carlo_connectivity(spec, args.failures, args.trials, args.seed)
    record = {
        "family": spec.family.value,
        "l": spec.rows,
        "m": spec.cols,
        "N": spec.cube_nodes,
        "failures": args.failures,
        "trials": args.trials,
        "seed": args.seed,
        "estimate": estimate,
    }
    if args.format == "json":
        return json.dumps(record, indent=2) + "\n"
    if args.format == "csv":
        header = ",".join(record)
        values = ",".join(str(value) for value in record.values())
        return f"{header}\n{values}\n"
    return "\n".join(f"{key}: {value}" for key, value in record.items()) + "\n"


def _cmd_export(args: argparse.Namespace) -> str:
    spec = _spec_from_args(args)
    topology = build_graph(spec, node_cap=args.max_nodes)
    return export_topology(topology, args.export_format).decode()


def _cmd_scale(args: argparse.Namespace) -> str:
    spec = _spec_from_args(args)
    steps = scaling_sequence(
        ScalingMode(args.mode), spec, args.steps, node_cap=args.max_nodes
    )
    if args.format == "json":
        doc = [
            {
                "step": number,
                "mode": step.mode.value,
                "family": step.spec.family.value,
                "l": step.spec.rows,
                "m": step.spec.cols,
                "N": step.spec.cube_nodes,
                "nodes": step.spec.node_count,
                "degree": step.degree,
                "existing_nodes_reconfigured": step.existing_nodes_reconfigured,
            }
            for number, step in enumerate(steps, start=1)
        ]
        return json.dumps(doc, indent=2) + "\n"
    if args.format == "csv":
        return scaling_csv(steps)
    lines = [
        f"{number}. {step.spec.label()} nodes={step.spec.node_count} "
        f"degree={step.degree} "
        f"reconfigures_existing={'yes' if step.existing_nodes_reconfigured else 'no'}"
        for number, step in enumerate(steps, start=1)
    ]
    return "\n".join(lines) + "\n"


def _cmd_self_check(args: argparse.Namespace) -> tuple[str, int]:
    data_dir = Path(args.data_dir) if args.data_dir else None
    results = self_check(max_nodes=args.max_nodes, data_dir=data_dir)
    lines = []
    for result in results:
        if result.passed:
            lines.append(f"PASS  {result.group}")
        else:
            lines.append(f"FAIL  {result.group}: {result.detail}")
    failed = sum(not result.passed for result in results)
    lines.append(f"{len(results) - failed}/{len(results)} groups passed")
    return "\n".join(lines) + "\n", EXIT_OK if failed == 0 else EXIT_USAGE


def _build_parser() -> _Parser:
    parser = _Parser(prog="tehnet", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_metrics = sub.add_parser("metrics", help="closed-form network metrics")
    _add_spec_arguments(p_metrics)
    _add_common_arguments(p_metrics)

    p_route = sub.add_parser("route", help="deterministic shortest path")
    _add_spec_arguments(p_route)
    _add_common_arguments(p_route)
    p_route.add_argument("--from", dest="src", required=True, help="source i,j,k")
    p_route.add_argument("--to", dest="dst", required=True, help="destination i,j,k")

    p_table = sub.add_parser("table", help="comparison tables 1-3")
    p_table.add_argument("--id", type=int, choices=[1, 2, 3], required=True)
    # The reference tables quote square-convention costs, so that is the
    # default here (metrics defaults to exact).
    _add_common_arguments(p_table, convention_default="square")

    p_rel = sub.add_parser("reliability", help="reliability grid")
    p_rel.add_argument("--f-max", type=int, dest="f_max", default=9)
    p_rel.add_argument(
        "--spec",
        action="append",
        dest="specs",
        metavar="L,M,N",
        help="repeatable; defaults to the (4,4,8..64) series",
    )
    _add_common_arguments(p_rel)

    p_sim = sub.add_parser("simulate", help="Monte-Carlo fault connectivity")
    _add_spec_arguments(p_sim)
    _add_common_arguments(p_sim)
    p_sim.add_argument("--f", type=int, dest="failures", required=True)
    p_sim.add_argument("--trials", type=int, default=1000)
    p_sim.add_argument("--seed", type=int, default=0)

    p_export = sub.add_parser("export", help="write the explicit topology")
    _add_spec_arguments(p_export)
    p_export.add_argument(
        "--format",
        choices=["dot", "csv", "json"],
        default="csv",
        dest="export_format",
    )
    p_export.add_argument(
        "--max-nodes", type=int, default=DEFAULT_NODE_CAP, dest="max_nodes"
    )

    p_scale = sub.add_parser("scale", help="scale-up sequences")
    _add_spec_arguments(p_scale)
    _add_common_arguments(p_scale)
    p_scale.add_argument("--mode", choices=["torus", "hypercube"], required=True)
    p_scale.add_argument("--steps", type=int, required=True)

    p_check = sub.add_parser(
        "self-check", aliases=["self_check"], help="run the built-in oracle suite"
    )
    p_check.add_argument("--max-nodes", type=int, default=512, dest="max_nodes")
    p_check.add_argument("--data-dir", dest="data_dir", help=argparse.SUPPRESS)

    return parser


_HANDLERS = {
    "metrics": _cmd_metrics,
    "route": _cmd_route,
    "table": _cmd_table,
    "reliability": _cmd_reliability,
    "simulate": _cmd_simulate,
    "export": _cmd_export,
    "scale": _cmd_scale,
}


def run(
    argv: Sequence[str] | None = None,
    out: IO[str] | None = None,
    err: IO[str] | None = None,
) -> int:
    """Parse ``argv``, run one command, and return the exit code."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command in ("self-check", "self_check"):
            text, code = _cmd_self_check(args)
            out.write(text)
            return code
        if getattr(args, "steps", None) is not None and args.steps < 1:
            raise _UsageError("--steps must be >= 1")
        text = _HANDLERS[args.command](args)
    except _UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except ResourceLimitError as exc:
        err.write(f"resource limit: {exc}\n")
        return EXIT_RESOURCE
    except TehnetError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_DOMAIN
    out.write(text)
    return EXIT_OK


def main() -> None:
    sys.exit(run())
