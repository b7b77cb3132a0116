"""Closed-form performance metrics with breadth-first-search oracles.

Covers node degree, total link count, diameter, and topological cost
(links times diameter).  Every closed form here has an explicit-graph
oracle nearby: link counts against built edge sets, diameters against
BFS eccentricities.

Two diameter conventions exist for networks with a torus part:

* ``exact`` uses the per-dimension ring diameters floor(rows/2) +
  floor(cols/2).
* ``square`` treats the torus part as a near-square array of its node
  count P and uses 2 * floor(isqrt(P) / 2), the convention behind the
  square-torus columns of the reference comparison tables.  For square
  tori with even sides the two agree.
"""

from __future__ import annotations

import math
import warnings
from collections import deque
from dataclasses import dataclass
from enum import Enum

from .errors import ClosedFormApproximationWarning, ResourceLimitError
from .topology import Family, NetworkSpec, Topology


class DiameterConvention(str, Enum):
    EXACT = "exact"
    SQUARE_APPROX = "square"


@dataclass(frozen=True)
class MetricsReport:
    """A consistent bundle of the closed-form metrics for one network."""

    spec: NetworkSpec
    node_count: int
    degree: int
    links: int
    diameter: int
    cost: int
    convention: DiameterConvention

    def to_json_dict(self) -> dict:
        return {
            "family": self.spec.family.value,
            "l": self.spec.rows,
            "m": self.spec.cols,
            "N": self.spec.cube_nodes,
            "nodes": self.node_count,
            "degree": self.degree,
            "links": self.links,
            "diameter": self.diameter,
            "cost": self.cost,
            "convention": self.convention.value,
        }


METRICS_CSV_HEADER = "family,l,m,N,nodes,degree,links,diameter,cost,convention"


def metrics_csv_line(report: MetricsReport) -> str:
    d = report.to_json_dict()
    return ",".join(str(d[key]) for key in METRICS_CSV_HEADER.split(","))


def _warn_if_approximate(spec: NetworkSpec) -> None:
    if spec.has_torus_part and (spec.rows < 3 or spec.cols < 3):
        warnings.warn(
            f"closed-form link count for {spec.label()} counts coincident "
            f"ring links twice; the simple graph has {link_count_simple(spec)} "
            f"links, the closed form {_closed_links(spec)}",
            ClosedFormApproximationWarning,
            stacklevel=3,
        )


def _closed_links(spec: NetworkSpec) -> int:
    return spec.node_count * spec.nominal_degree // 2


def link_count_closed(spec: NetworkSpec) -> int:
    """Total links in closed form: node_count * degree / 2.

    Exact for rows, cols >= 3 (and for pure hypercubes); otherwise a
    :class:`ClosedFormApproximationWarning` is emitted because rings of
    size 2 collapse their two parallel links into one.
    """
    _warn_if_approximate(spec)
    return _closed_links(spec)


def _ring_edges(size: int) -> int:
    # A ring of s >= 3 nodes has s edges, a 2-ring has the single edge,
    # a 1-ring has none.
    if size >= 3:
        return size
    return 1 if size == 2 else 0


def link_count_simple(spec: NetworkSpec) -> int:
    """Edge count of the de-duplicated simple graph, in closed form.

    Matches ``len(build_graph(spec).edges)`` for every spec; equals
    :func:`link_count_closed` whenever rows, cols >= 3 or absent.
    """
    cube_edges = spec.node_count * spec.cube_dim // 2
    row_ring_edges = spec.rows * spec.cube_nodes * _ring_edges(spec.cols)
    col_ring_edges = spec.cols * spec.cube_nodes * _ring_edges(spec.rows)
    return cube_edges + row_ring_edges + col_ring_edges


def diameter_closed(spec: NetworkSpec) -> int:
    """Exact diameter: floor(rows/2) + floor(cols/2) + cube_dim.

    Valid for every dimension >= 1, including the degenerate families.
    """
    return spec.rows // 2 + spec.cols // 2 + spec.cube_dim


def square_torus_diameter(node_count: int) -> int:
    """Diameter convention for a torus quoted only by its node count P.

    Returns 2 * floor(isqrt(P) / 2), i.e. the exact diameter of an s x s
    torus with s = isqrt(P) rounded down to even.  Computed with exact
    integer arithmetic.
    """
    return 2 * (math.isqrt(node_count) // 2)


def _convention_diameter(spec: NetworkSpec, convention: DiameterConvention) -> int:
    if convention is DiameterConvention.EXACT or spec.family is Family.HYPERCUBE:
        return diameter_closed(spec)
    return square_torus_diameter(spec.rows * spec.cols) + spec.cube_dim


def _eccentricity(adjacency, start: int) -> int:
    dist = [-1] * len(adjacency)
    dist[start] = 0
    queue = deque([start])
    far = 0
    while queue:
        node = queue.popleft()
        for nbr in adjacency[node]:
            if dist[nbr] < 0:
                dist[nbr] = dist[node] + 1
                far = dist[nbr]
                queue.append(nbr)
    return far


def diameter_bfs(topology: Topology, all_pairs: bool = False, cap: int = 4096) -> int:
    """Diameter by breadth-first search over the explicit edge set.

    By default returns the eccentricity of node 0, which equals the
    diameter because these graphs are vertex-transitive (a property the
    test suite checks independently).  With ``all_pairs=True`` every node
    is used as a BFS source, subject to ``cap``.

    Raises:
        ResourceLimitError: In all-pairs mode when node_count exceeds
            ``cap``.
    """
    if all_pairs and topology.node_count > cap:
        raise ResourceLimitError(
            f"all-pairs diameter on {topology.node_count} nodes exceeds the "
            f"cap of {cap}"
        )
    adjacency = topology.adjacency
    if not all_pairs:
        return _eccentricity(adjacency, 0)
    return max(_eccentricity(adjacency, s) for s in range(topology.node_count))


def topological_cost(
    spec: NetworkSpec, convention: DiameterConvention = DiameterConvention.EXACT
) -> int:
    """Links times diameter, under the selected diameter convention."""
    return link_count_closed(spec) * _convention_diameter(spec, convention)


def metrics_report(
    spec: NetworkSpec, convention: DiameterConvention = DiameterConvention.EXACT
) -> MetricsReport:
    """Bundle degree, links, diameter, and cost; cost = links * diameter."""
    links = link_count_closed(spec)
    diameter = _convention_diameter(spec, convention)
    return MetricsReport(
        spec=spec,
        node_count=spec.node_count,
        degree=spec.nominal_degree,
        links=links,
        diameter=diameter,
        cost=links * diameter,
        convention=convention,
    )
