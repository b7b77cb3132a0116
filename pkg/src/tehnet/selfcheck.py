"""Built-in verification: oracle agreement and golden-table checks.

Each check group cross-validates one closed form against an independent
route (explicit graph enumeration, BFS, or the frozen table files
shipped with the package).  Groups report pass/fail rather than raising,
so a failing build can still enumerate everything that is wrong.
"""

from __future__ import annotations

import importlib.resources
from dataclasses import dataclass
from itertools import product
from pathlib import Path

from .metrics import (
    diameter_bfs,
    diameter_closed,
    link_count_closed,
    link_count_simple,
)
from .reliability import (
    monte_carlo_connectivity,
    reliability_fraction,
    reliability_percent,
    render_reliability_csv,
    unreliability_percent,
)
from .routing import bfs_distance, distance_closed, route
from .tables import render_comparison_csv, table1_rows, table2_rows, table3_grid
from .topology import NodeAddress, build_graph, decode_address, teh_spec

GOLDEN_FILES = {
    "table1": "table1_links.csv",
    "table2": "table2_cost.csv",
    "table3": "table3_reliability.csv",
}

_ORACLE_GRID = [
    (rows, cols, cube)
    for rows, cols, cube in product((3, 4, 5), (3, 4, 5), (1, 2, 4, 8))
]
_ROUTING_SPECS = ((3, 3, 4), (4, 4, 2), (2, 2, 8))


@dataclass(frozen=True)
class CheckResult:
    group: str
    passed: bool
    detail: str


def _check_transitivity() -> str:
    for dims in ((3, 4, 4), (2, 2, 8)):
        spec = teh_spec(*dims)
        edges = set(build_graph(spec).edges)
        for da, db, dc in product(
            range(spec.rows), range(spec.cols), range(spec.cube_nodes)
        ):
            mapped = set()
            for src, dst, kind in edges:
                pair = []
                for index in (src, dst):
                    addr = decode_address(spec, index)
                    image = NodeAddress(
                        (addr.row + da) % spec.rows,
                        (addr.col + db) % spec.cols,
                        addr.cube ^ dc,
                    )
                    pair.append(
                        (image.row * spec.cols + image.col) * spec.cube_nodes
                        + image.cube
                    )
                a, b = sorted(pair)
                mapped.add((a, b, kind))
            if mapped != edges:
                return f"shift ({da},{db},{dc}) does not preserve {spec.label()}"
    return ""


def _check_links(max_nodes: int) -> str:
    for dims in _ORACLE_GRID:
        spec = teh_spec(*dims)
        if spec.node_count > max_nodes:
            continue
        built = len(build_graph(spec).edges)
        closed = link_count_closed(spec)
        simple = link_count_simple(spec)
        if not built == closed == simple:
            return (
                f"{spec.label()}: built {built}, closed {closed}, simple {simple}"
            )
    return ""


def _check_diameter(max_nodes: int) -> str:
    # Eccentricity from node 0 suffices: the transitivity group runs first.
    for dims in _ORACLE_GRID:
        spec = teh_spec(*dims)
        if spec.node_count > max_nodes:
            continue
        measured = diameter_bfs(build_graph(spec))
        expected = diameter_closed(spec)
        if measured != expected:
            return f"{spec.label()}: BFS {measured}, closed form {expected}"
    return ""


def _check_routing() -> str:
    for dims in _ROUTING_SPECS:
        spec = teh_spec(*dims)
        topology = build_graph(spec)
        nodes = [decode_address(spec, index) for index in range(spec.node_count)]
        for src in nodes:
            for dst in nodes:
                closed = distance_closed(spec, src, dst)
                searched = bfs_distance(topology, src, dst)
                routed = route(spec, src, dst).length
                if not closed == searched == routed:
                    return (
                        f"{spec.label()} {src}->{dst}: closed {closed}, "
                        f"bfs {searched}, route {routed}"
                    )
    return ""


def _golden_text(name: str, data_dir: Path | None) -> str:
    if data_dir is not None:
        return (data_dir / GOLDEN_FILES[name]).read_text()
    resource = importlib.resources.files("tehnet").joinpath("data", GOLDEN_FILES[name])
    return resource.read_text()


def _check_tables(data_dir: Path | None) -> str:
    grid = table3_grid()
    rendered = {
        "table1": render_comparison_csv(table1_rows()),
        "table2": render_comparison_csv(table2_rows()),
        "table3": render_reliability_csv(list(grid.specs), list(grid.rows)),
    }
    for name, text in rendered.items():
        golden = _golden_text(name, data_dir)
        if text != golden:
            return f"{name} does not match its golden file"
    return ""


def _check_reliability() -> str:
    spec = teh_spec(4, 4, 8)
    degree = spec.nominal_degree
    for failures in range(degree + 1):
        surviving = reliability_fraction(spec, failures)
        if surviving + (1 - surviving) != 1:
            return f"complement broken at f={failures}"
    percents = [reliability_percent(spec, f) for f in range(degree + 1)]
    if percents != sorted(percents, reverse=True) or percents[-1] != 0:
        return f"percentages not strictly decreasing to zero: {percents}"
    if unreliability_percent(spec, 0) != 0:
        return "unreliability at f=0 is not zero"
    return ""


def _check_monte_carlo() -> str:
    spec = teh_spec(4, 4, 8)
    if monte_carlo_connectivity(spec, 0, 200, 42) != 1.0:
        return "f=0 estimate is not 1.0"
    if monte_carlo_connectivity(spec, 7, 200, 42) != 0.0:
        return "f=degree estimate is not 0.0"
    first = monte_carlo_connectivity(spec, 3, 200, 42)
    second = monte_carlo_connectivity(spec, 3, 200, 42)
    if first != second:
        return f"seed 42 not deterministic: {first} vs {second}"
    return ""


def self_check(max_nodes: int = 512, data_dir: Path | None = None) -> list[CheckResult]:
    """Run every check group and return one result per group.

    Args:
        max_nodes: Upper bound on node_count for the graph-building
            oracle grids.
        data_dir: Override directory for the golden table files
            (defaults to the files shipped inside the package).
    """
    groups = [
        ("vertex-transitivity", lambda: _check_transitivity()),
        ("links-closed-form", lambda: _check_links(max_nodes)),
        ("diameter-closed-form", lambda: _check_diameter(max_nodes)),
        ("routing", lambda: _check_routing()),
        ("tables", lambda: _check_tables(data_dir)),
        ("reliability-model", lambda: _check_reliability()),
        ("monte-carlo", lambda: _check_monte_carlo()),
    ]
    results = []
    for name, runner in groups:
        try:
            detail = runner()
        except Exception as exc:  # a crashed group is a failed group
            detail = f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(group=name, passed=not detail, detail=detail))
    return results
