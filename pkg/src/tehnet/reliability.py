"""Analytical reliability model and a seeded fault-injection simulator.

The analytical model treats a node of degree d with f failed incident
links as (d - f) / d reliable; percentages are rounded half-away-from-
zero to one decimal.  For f above the degree no value exists (rendered
as an em dash in table output; exact zero renders as ``00``).

The Monte-Carlo simulator estimates source-destination connectivity
under f uniformly random failures among the links incident to a fixed
source node, cross-checking the model's endpoints: certain connectivity
at f = 0, certain isolation at f = degree.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import TooManyFaultsError
from .routing import distance_closed
from .topology import (
    NetworkSpec,
    Topology,
    build_graph,
    decode_address,
)


def _round1_half_away(numerator: int, denominator: int) -> float:
    # Round numerator/denominator * 100 to one decimal, halves away from
    # zero, using integer arithmetic only (values here are never negative).
    tenths = (2000 * numerator + denominator) // (2 * denominator)
    return tenths / 10


def reliability_fraction(spec: NetworkSpec, failures: int) -> Fraction | None:
    """Exact surviving-link fraction (d - f) / d, or None for f > d."""
    if failures < 0:
        raise ValueError(f"failure count must be >= 0, got {failures}")
    degree = spec.nominal_degree
    if failures > degree:
        return None
    return Fraction(degree - failures, degree)


def reliability_percent(spec: NetworkSpec, failures: int) -> float | None:
    """Reliability percentage, one decimal, or None for f above the degree.

    Examples: degree 7 with one failure gives 85.7; with seven failures
    gives 0.0; with eight there is no value.
    """
    fraction = reliability_fraction(spec, failures)
    if fraction is None:
        return None
    return _round1_half_away(fraction.numerator * 100, fraction.denominator * 100)


def unreliability_percent(spec: NetworkSpec, failures: int) -> float | None:
    """100 minus the exact reliability, then rounded to one decimal."""
    fraction = reliability_fraction(spec, failures)
    if fraction is None:
        return None
    complement = 1 - fraction
    return _round1_half_away(complement.numerator * 100, complement.denominator * 100)


@dataclass(frozen=True)
class ReliabilityRow:
    """One table row: a failure count and one cell per network spec."""

    failures: int
    cells: tuple[float | None, ...]


def reliability_table(specs: list[NetworkSpec], f_max: int) -> list[ReliabilityRow]:
    """Rows f = 1..f_max of reliability percentages, one cell per spec."""
    if not specs:
        raise ValueError("at least one spec is required")
    return [
        ReliabilityRow(
            failures=f,
            cells=tuple(reliability_percent(spec, f) for spec in specs),
        )
        for f in range(1, f_max + 1)
    ]


def format_reliability_cell(value: float | None) -> str:
    """Table-mode cell text: ``—`` for absent, ``00`` for exact zero,
    whole numbers without a decimal point, otherwise one decimal."""
    if value is None:
        return "—"
    if value == 0:
        return "00"
    if value == int(value):
        return str(int(value))
    return f"{value:.1f}"


def _csv_cell(value: float | None) -> str:
    if value is None:
        return ""
    if value == int(value):
        return str(int(value))
    return f"{value:.1f}"


def render_reliability_csv(specs: list[NetworkSpec], rows: list[ReliabilityRow]) -> str:
    """CSV with a ``failures`` column plus one quoted column per spec."""
    header = ",".join(["failures"] + [f'"{spec.label()}"' for spec in specs])
    lines = [header]
    for row in rows:
        lines.append(
            ",".join([str(row.failures)] + [_csv_cell(cell) for cell in row.cells])
        )
    return "\n".join(lines) + "\n"


def render_reliability_text(specs: list[NetworkSpec], rows: list[ReliabilityRow]) -> str:
    """Aligned text table with the ``00`` and ``—`` typography."""
    headers = ["failures"] + [spec.label() for spec in specs]
    body = [
        [str(row.failures)] + [format_reliability_cell(cell) for cell in row.cells]
        for row in rows
    ]
    widths = [
        max(len(headers[col]), *(len(line[col]) for line in body))
        for col in range(len(headers))
    ]
    out = ["  ".join(h.rjust(w) for h, w in zip(headers, widths))]
    for line in body:
        out.append("  ".join(cell.rjust(w) for cell, w in zip(line, widths)))
    return "\n".join(out) + "\n"


@dataclass(frozen=True)
class FaultScenario:
    """A deterministic set of failed links and nodes for one topology."""

    spec: NetworkSpec
    failed_links: frozenset[tuple[int, int]]
    failed_nodes: frozenset[int]
    seed: int


def _trial_rng(seed: int, counter: int) -> random.Random:
    # Per-trial generators are derived by hashing (seed, counter) so the
    # trial order never affects individual draws.
    digest = hashlib.sha256(f"{seed}:{counter}".encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def inject_faults(
    topology: Topology, count_links: int, count_nodes: int, seed: int
) -> FaultScenario:
    """Sample failed links and nodes without replacement, deterministically.

    Node 0 is the conventional source for connectivity experiments and is
    never failed.

    Raises:
        TooManyFaultsError: If either count exceeds what is available.
    """
    links = [(src, dst) for src, dst, _ in topology.edges]
    eligible_nodes = list(range(1, topology.node_count))
    if count_links > len(links):
        raise TooManyFaultsError(
            f"asked for {count_links} failed links, only {len(links)} exist"
        )
    if count_nodes > len(eligible_nodes):
        raise TooManyFaultsError(
            f"asked for {count_nodes} failed nodes, only "
            f"{len(eligible_nodes)} are eligible"
        )
    rng = _trial_rng(seed, 0)
    failed_links = frozenset(rng.sample(links, count_links))
    failed_nodes = frozenset(rng.sample(eligible_nodes, count_nodes))
    return FaultScenario(
        spec=topology.spec,
        failed_links=failed_links,
        failed_nodes=failed_nodes,
        seed=seed,
    )


def _reaches(adjacency, start: int, goal: int, removed: set[frozenset[int]]) -> bool:
    if start == goal:
        return True
    seen = {start}
    frontier = [start]
    while frontier:
        next_frontier = []
        for node in frontier:
            for nbr in adjacency[node]:
                if nbr in seen or frozenset((node, nbr)) in removed:
                    continue
                if nbr == goal:
                    return True
                seen.add(nbr)
                next_frontier.append(nbr)
        frontier = next_frontier
    return False


def antipodal_node(spec: NetworkSpec) -> int:
    """The lowest-index node at maximum closed-form distance from node 0."""
    origin = decode_address(spec, 0)
    best_index, best_dist = 0, -1
    for index in range(spec.node_count):
        dist = distance_closed(spec, origin, decode_address(spec, index))
        if dist > best_dist:
            best_index, best_dist = index, dist
    return best_index


def monte_carlo_connectivity(
    spec: NetworkSpec, failures: int, trials: int, seed: int
) -> float:
    """Estimate source-destination connectivity under incident-link faults.

    Each trial fails ``failures`` uniformly random links incident to node
    0 and checks by BFS whether the fixed antipodal destination (the
    lowest-index node at maximum distance from node 0) is still
    reachable.  The estimate is the fraction of connected trials, and is
    bitwise deterministic for a given (spec, failures, trials, seed):
    per-trial seeds are derived by counter, so a parallel evaluation
    would reduce to the same result in the same order.

    Raises:
        TooManyFaultsError: If ``failures`` exceeds the source degree.
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    topology = build_graph(spec)
    adjacency = topology.adjacency
    source = 0
    incident = [frozenset((source, nbr)) for nbr in adjacency[source]]
    if failures > len(incident):
        raise TooManyFaultsError(
            f"asked for {failures} failed incident links, node 0 has "
            f"{len(incident)}"
        )
    destination = antipodal_node(spec)
    connected = 0
    for trial in range(trials):
        rng = _trial_rng(seed, trial)
        removed = set(rng.sample(incident, failures))
        if _reaches(adjacency, source, destination, removed):
            connected += 1
    return connected / trials
