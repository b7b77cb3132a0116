"""Network families, node addressing, and explicit graph construction.

Three interconnection-network families share one (rows, cols, cube_nodes)
frame: the binary hypercube, the 2D wraparound torus, and the product
network that runs ``cube_nodes`` concurrent tori with hypercube links
joining nodes that occupy the same torus position.  Degenerate dimensions
are pinned to 1 so a single code path serves all three families.

A node address is the triple (row, col, cube) with
0 <= row < rows, 0 <= col < cols, 0 <= cube < cube_nodes; the dense node
index is ``(row * cols + col) * cube_nodes + cube``, which keeps each
hypercube group of ``cube_nodes`` nodes contiguous.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import NamedTuple

from .errors import (
    AddressOutOfRangeError,
    FamilyMismatchError,
    IndexOutOfRangeError,
    NonPositiveDimensionError,
    NotPowerOfTwoError,
    ResourceLimitError,
    UnsupportedFormatError,
)

#: Default ceiling on node_count for explicit graph construction.
DEFAULT_NODE_CAP = 1 << 21

# Edge kind labels.  A torus-row edge joins column neighbours within one
# row ring; a torus-column edge joins row neighbours within one column
# ring; hypercube edges are tagged with the bit they complement.
TORUS_ROW = "torus_row"
TORUS_COLUMN = "torus_column"
_HYPERCUBE_PREFIX = "hypercube_dim_"


def hypercube_kind(dim: int) -> str:
    """Edge kind label for the hypercube link complementing bit ``dim``."""
    return f"{_HYPERCUBE_PREFIX}{dim}"


class Family(str, Enum):
    """The three supported network families."""

    HYPERCUBE = "hypercube"
    TORUS = "torus"
    TEH = "teh"


class NodeAddress(NamedTuple):
    """A node position: torus row, torus column, hypercube label."""

    row: int
    col: int
    cube: int

    def __str__(self) -> str:
        return f"{self.row},{self.col},{self.cube}"


@dataclass(frozen=True)
class NetworkSpec:
    """A validated network description.

    Attributes:
        family: Which network family this describes.
        rows: Torus row count (1 for a pure hypercube).
        cols: Torus column count (1 for a pure hypercube).
        cube_nodes: Nodes per hypercube group; an exact power of two
            (1 for a pure torus).
        cube_dim: log2(cube_nodes), the number of hypercube bit positions.
    """

    family: Family
    rows: int
    cols: int
    cube_nodes: int
    cube_dim: int

    @property
    def node_count(self) -> int:
        return self.rows * self.cols * self.cube_nodes

    @property
    def nominal_degree(self) -> int:
        """Closed-form node degree: 4 per torus part plus one per cube bit.

        Exact whenever rows and cols are both >= 3 (or absent); smaller
        rings collapse coincident links, lowering the real degree.
        """
        if self.family is Family.HYPERCUBE:
            return self.cube_dim
        if self.family is Family.TORUS:
            return 4
        return 4 + self.cube_dim

    @property
    def has_torus_part(self) -> bool:
        return self.family is not Family.HYPERCUBE

    def label(self) -> str:
        """Human-readable dimension triple, e.g. ``(4, 4, 8)``."""
        return f"({self.rows}, {self.cols}, {self.cube_nodes})"


def validate_spec(
    family: Family | str, rows: int = 1, cols: int = 1, cube_nodes: int = 1
) -> NetworkSpec:
    """Validate raw dimensions and return a normalized NetworkSpec.

    Args:
        family: Network family, as a :class:`Family` or its string value.
        rows: Torus rows; must be 1 for the hypercube family.
        cols: Torus columns; must be 1 for the hypercube family.
        cube_nodes: Hypercube group size; a power of two; must be 1 for
            the pure torus family.

    Raises:
        NonPositiveDimensionError: If any dimension is below 1.
        NotPowerOfTwoError: If cube_nodes is not a power of two.
        FamilyMismatchError: If a dimension is fixed by the family but
            not 1.
    """
    family = Family(family)
    if rows < 1 or cols < 1 or cube_nodes < 1:
        raise NonPositiveDimensionError(
            f"dimensions must be >= 1, got rows={rows} cols={cols} "
            f"cube_nodes={cube_nodes}"
        )
    if cube_nodes & (cube_nodes - 1):
        raise NotPowerOfTwoError(f"cube_nodes must be a power of two, got {cube_nodes}")
    if family is Family.HYPERCUBE and (rows != 1 or cols != 1):
        raise FamilyMismatchError(
            f"hypercube family fixes rows=cols=1, got rows={rows} cols={cols}"
        )
    if family is Family.TORUS and cube_nodes != 1:
        raise FamilyMismatchError(
            f"torus family fixes cube_nodes=1, got cube_nodes={cube_nodes}"
        )
    return NetworkSpec(
        family=family,
        rows=rows,
        cols=cols,
        cube_nodes=cube_nodes,
        cube_dim=cube_nodes.bit_length() - 1,
    )


def hypercube_spec(cube_nodes: int) -> NetworkSpec:
    return validate_spec(Family.HYPERCUBE, 1, 1, cube_nodes)


def torus_spec(rows: int, cols: int) -> NetworkSpec:
    return validate_spec(Family.TORUS, rows, cols, 1)


def teh_spec(rows: int, cols: int, cube_nodes: int) -> NetworkSpec:
    return validate_spec(Family.TEH, rows, cols, cube_nodes)


def check_address(spec: NetworkSpec, addr: NodeAddress) -> None:
    """Raise AddressOutOfRangeError unless ``addr`` is valid for ``spec``."""
    if not (
        0 <= addr.row < spec.rows
        and 0 <= addr.col < spec.cols
        and 0 <= addr.cube < spec.cube_nodes
    ):
        raise AddressOutOfRangeError(
            f"address {addr} out of range for {spec.label()}"
        )


def encode_address(spec: NetworkSpec, addr: NodeAddress) -> int:
    """Map an address to its dense node index, row-major with the cube
    label innermost."""
    check_address(spec, addr)
    return (addr.row * spec.cols + addr.col) * spec.cube_nodes + addr.cube


def decode_address(spec: NetworkSpec, index: int) -> NodeAddress:
    """Inverse of :func:`encode_address`."""
    if not 0 <= index < spec.node_count:
        raise IndexOutOfRangeError(
            f"index {index} outside 0..{spec.node_count - 1}"
        )
    torus_pos, cube = divmod(index, spec.cube_nodes)
    row, col = divmod(torus_pos, spec.cols)
    return NodeAddress(row, col, cube)


def neighbors(spec: NetworkSpec, addr: NodeAddress) -> list[tuple[NodeAddress, str]]:
    """All distinct one-move neighbours of ``addr``, tagged by edge kind.

    Candidates are generated in the fixed order column step forward,
    column step backward, row step forward, row step backward, then one
    bit complement per cube bit (ascending).  Duplicates keep their first
    tag and the address itself is dropped; both cases occur when a ring
    dimension is 2 or 1.
    """
    check_address(spec, addr)
    row, col, cube = addr
    rows, cols = spec.rows, spec.cols
    candidates: list[tuple[NodeAddress, str]] = [
        (NodeAddress(row, (col + 1) % cols, cube), TORUS_ROW),
        (NodeAddress(row, (cols + col - 1) % cols, cube), TORUS_ROW),
        (NodeAddress((row + 1) % rows, col, cube), TORUS_COLUMN),
        (NodeAddress((rows + row - 1) % rows, col, cube), TORUS_COLUMN),
    ]
    candidates.extend(
        (NodeAddress(row, col, cube ^ (1 << d)), hypercube_kind(d))
        for d in range(spec.cube_dim)
    )
    out: list[tuple[NodeAddress, str]] = []
    seen = {addr}
    for cand, kind in candidates:
        if cand not in seen:
            seen.add(cand)
            out.append((cand, kind))
    return out


@dataclass(frozen=True)
class Topology:
    """An explicit simple graph over the dense node index space.

    Edges are stored once, as (src, dst, kind) with src < dst, sorted
    lexicographically.  Instances are immutable and safe to share across
    threads.
    """

    spec: NetworkSpec
    edges: tuple[tuple[int, int, str], ...]

    @property
    def node_count(self) -> int:
        return self.spec.node_count

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Sorted neighbour lists, indexed by node."""
        adj: list[list[int]] = [[] for _ in range(self.node_count)]
        for src, dst, _ in self.edges:
            adj[src].append(dst)
            adj[dst].append(src)
        return tuple(tuple(sorted(nbrs)) for nbrs in adj)


def build_graph(spec: NetworkSpec, node_cap: int = DEFAULT_NODE_CAP) -> Topology:
    """Construct the explicit edge set for ``spec``.

    The edge set is the union over all nodes of :func:`neighbors`, stored
    undirected and de-duplicated.

    Raises:
        ResourceLimitError: If node_count exceeds ``node_cap``.
    """
    if spec.node_count > node_cap:
        raise ResourceLimitError(
            f"{spec.label()} has {spec.node_count} nodes, above the cap of "
            f"{node_cap}; raise the cap to build it anyway"
        )
    edges: set[tuple[int, int, str]] = set()
    for index in range(spec.node_count):
        addr = decode_address(spec, index)
        for nbr, kind in neighbors(spec, addr):
            other = encode_address(spec, nbr)
            a, b = (index, other) if index < other else (other, index)
            edges.add((a, b, kind))
    return Topology(spec=spec, edges=tuple(sorted(edges)))


# Deterministic edge colors for DOT output, keyed by kind.
_DOT_TORUS_COLORS = {TORUS_ROW: "#1f77b4", TORUS_COLUMN: "#2ca02c"}
_DOT_CUBE_PALETTE = (
    "#d62728",
    "#9467bd",
    "#8c564b",
    "#e377c2",
    "#7f7f7f",
    "#bcbd22",
    "#17becf",
)


def _dot_color(kind: str) -> str:
    if kind in _DOT_TORUS_COLORS:
        return _DOT_TORUS_COLORS[kind]
    dim = int(kind.removeprefix(_HYPERCUBE_PREFIX))
    return _DOT_CUBE_PALETTE[dim % len(_DOT_CUBE_PALETTE)]


def export_topology(topology: Topology, format: str) -> bytes:
    """Serialize a topology as ``dot``, ``csv``, or ``json`` bytes.

    Output is deterministic and byte-stable: nodes ascend by index and
    edges are sorted lexicographically.  The CSV columns are
    ``src_index,dst_index,kind``; the JSON document carries the spec
    fields (family, l, m, n_cube_nodes, node_count) plus the edge list.

    Raises:
        UnsupportedFormatError: For an unknown format name.
    """
    spec = topology.spec
    if format == "csv":
        lines = ["src_index,dst_index,kind"]
        lines.extend(f"{src},{dst},{kind}" for src, dst, kind in topology.edges)
        return ("\n".join(lines) + "\n").encode()
    if format == "json":
        doc = {
            "family": spec.family.value,
            "l": spec.rows,
            "m": spec.cols,
            "n_cube_nodes": spec.cube_nodes,
            "node_count": spec.node_count,
            "edges": [
                {"src": src, "dst": dst, "kind": kind}
                for src, dst, kind in topology.edges
            ],
        }
        return (json.dumps(doc, indent=2) + "\n").encode()
    if format == "dot":
        name = f"{spec.family.value}_{spec.rows}_{spec.cols}_{spec.cube_nodes}"
        lines = [f'graph "{name}" {{']
        for index in range(spec.node_count):
            lines.append(f'  {index} [label="{decode_address(spec, index)}"];')
        for src, dst, kind in topology.edges:
            lines.append(f'  {src} -- {dst} [color="{_dot_color(kind)}"];')
        lines.append("}")
        return ("\n".join(lines) + "\n").encode()
    raise UnsupportedFormatError(f"unknown topology format {format!r}")
