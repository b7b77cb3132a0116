"""Elementary moves and shortest-path routing.

Five elementary moves generate every edge: a torus step in either
direction along the column or row ring, and a single-bit complement of
the hypercube label.  The point-to-point router composes them in a fixed
order (column steps, then row steps, then cube bits ascending), which
always yields a shortest path because the ring and cube coordinates are
independent.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import InvalidDimensionError, UnreachableError
from .topology import (
    NetworkSpec,
    NodeAddress,
    Topology,
    check_address,
    encode_address,
)


class Move(NamedTuple):
    """One elementary move.

    ``kind`` is one of ``row_plus``, ``row_minus``, ``col_plus``,
    ``col_minus``, or ``cube``; ``dim`` is the bit index for cube moves
    and -1 otherwise.
    """

    kind: str
    dim: int = -1

    @property
    def label(self) -> str:
        """Serialized name, e.g. ``col_plus`` or ``cube_dim_2``."""
        return f"cube_dim_{self.dim}" if self.kind == "cube" else self.kind


ROW_PLUS = Move("row_plus")
ROW_MINUS = Move("row_minus")
COL_PLUS = Move("col_plus")
COL_MINUS = Move("col_minus")


def cube_move(dim: int) -> Move:
    return Move("cube", dim)


def apply_move(spec: NetworkSpec, addr: NodeAddress, move: Move) -> NodeAddress:
    """Apply one elementary move and return the image address.

    Torus steps wrap modulo the ring size; a cube move complements one
    bit of the hypercube label.

    Raises:
        AddressOutOfRangeError: If ``addr`` is invalid for ``spec``.
        InvalidDimensionError: If a cube move names a bit outside 0..n-1.
    """
    check_address(spec, addr)
    row, col, cube = addr
    if move.kind == "col_plus":
        return NodeAddress(row, (col + 1) % spec.cols, cube)
    if move.kind == "col_minus":
        return NodeAddress(row, (spec.cols + col - 1) % spec.cols, cube)
    if move.kind == "row_plus":
        return NodeAddress((row + 1) % spec.rows, col, cube)
    if move.kind == "row_minus":
        return NodeAddress((spec.rows + row - 1) % spec.rows, col, cube)
    if move.kind == "cube":
        if not 0 <= move.dim < spec.cube_dim:
            raise InvalidDimensionError(
                f"cube bit {move.dim} outside 0..{spec.cube_dim - 1}"
            )
        return NodeAddress(row, col, cube ^ (1 << move.dim))
    raise InvalidDimensionError(f"unknown move kind {move.kind!r}")


def _ring_distance(a: int, b: int, size: int) -> int:
    delta = abs(a - b)
    return min(delta, size - delta)


def distance_closed(spec: NetworkSpec, a: NodeAddress, b: NodeAddress) -> int:
    """Shortest-path length in closed form.

    Ring distance on rows plus ring distance on columns plus the Hamming
    distance of the cube labels.
    """
    check_address(spec, a)
    check_address(spec, b)
    return (
        _ring_distance(a.row, b.row, spec.rows)
        + _ring_distance(a.col, b.col, spec.cols)
        + (a.cube ^ b.cube).bit_count()
    )


@dataclass(frozen=True)
class Path:
    """A hop-by-hop route: ``len(moves) == len(hops) - 1``."""

    spec: NetworkSpec
    hops: tuple[NodeAddress, ...]
    moves: tuple[Move, ...]

    @property
    def length(self) -> int:
        return len(self.moves)

    def to_json_dict(self) -> dict:
        return {
            "family": self.spec.family.value,
            "l": self.spec.rows,
            "m": self.spec.cols,
            "n_cube_nodes": self.spec.cube_nodes,
            "hops": [str(hop) for hop in self.hops],
            "moves": [move.label for move in self.moves],
            "length": self.length,
        }


def _ring_moves(src: int, dst: int, size: int, plus: Move, minus: Move) -> list[Move]:
    # Shorter wrap direction; ties (delta == size/2) go to the plus move.
    forward = (dst - src) % size
    if forward == 0:
        return []
    if forward <= size - forward:
        return [plus] * forward
    return [minus] * (size - forward)


def route(spec: NetworkSpec, src: NodeAddress, dst: NodeAddress) -> Path:
    """Deterministic shortest path from ``src`` to ``dst``.

    Column steps first (shorter wrap direction), then row steps, then one
    cube move per differing bit in ascending bit order.  The result
    length always equals :func:`distance_closed`.
    """
    check_address(spec, src)
    check_address(spec, dst)
    pending = _ring_moves(src.col, dst.col, spec.cols, COL_PLUS, COL_MINUS)
    pending += _ring_moves(src.row, dst.row, spec.rows, ROW_PLUS, ROW_MINUS)
    pending += [
        cube_move(d) for d in range(spec.cube_dim) if (src.cube ^ dst.cube) >> d & 1
    ]
    hops = [src]
    for move in pending:
        hops.append(apply_move(spec, hops[-1], move))
    return Path(spec=spec, hops=tuple(hops), moves=tuple(pending))


def bfs_distance(topology: Topology, a: NodeAddress, b: NodeAddress) -> int:
    """Shortest-path length by breadth-first search on the explicit edges.

    Kept independent of :func:`distance_closed` so the two can
    cross-validate each other.

    Raises:
        UnreachableError: If ``b`` cannot be reached from ``a`` (possible
            only on faulted graphs).
    """
    spec = topology.spec
    start = encode_address(spec, a)
    goal = encode_address(spec, b)
    if start == goal:
        return 0
    adjacency = topology.adjacency
    dist = {start: 0}
    frontier = [start]
    while frontier:
        next_frontier = []
        for node in frontier:
            for nbr in adjacency[node]:
                if nbr not in dist:
                    dist[nbr] = dist[node] + 1
                    if nbr == goal:
                        return dist[nbr]
                    next_frontier.append(nbr)
        frontier = next_frontier
    raise UnreachableError(f"no path from {a} to {b}")
