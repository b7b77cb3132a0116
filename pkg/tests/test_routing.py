"""Elementary moves, closed-form distance, the router, and the BFS oracle."""

import pytest
from hypothesis import given, strategies as st

from bruteforce import adjacency_by_enumeration, bfs_dist
from strategies import spec_with_addresses
from tehnet import (
    COL_MINUS,
    COL_PLUS,
    ROW_MINUS,
    ROW_PLUS,
    InvalidDimensionError,
    NodeAddress,
    Topology,
    UnreachableError,
    apply_move,
    bfs_distance,
    build_graph,
    cube_move,
    decode_address,
    diameter_closed,
    distance_closed,
    hypercube_spec,
    route,
    teh_spec,
)


class TestApplyMove:
    def test_column_step_wraps(self):
        assert apply_move(teh_spec(2, 2, 8), NodeAddress(0, 0, 0), COL_PLUS) == (
            NodeAddress(0, 1, 0)
        )

    def test_row_step_backward_wraps(self):
        assert apply_move(teh_spec(4, 4, 8), NodeAddress(0, 0, 0), ROW_MINUS) == (
            NodeAddress(3, 0, 0)
        )

    def test_cube_move_complements_one_bit(self):
        assert apply_move(
            teh_spec(2, 2, 8), NodeAddress(0, 0, 5), cube_move(2)
        ) == NodeAddress(0, 0, 1)

    def test_cube_dimension_bound(self):
        with pytest.raises(InvalidDimensionError):
            apply_move(teh_spec(2, 2, 8), NodeAddress(0, 0, 0), cube_move(3))

    @given(spec_with_addresses(count=1))
    def test_torus_round_trips(self, spec_and_addr):
        spec, (addr,) = spec_and_addr
        there = apply_move(spec, addr, COL_PLUS)
        assert apply_move(spec, there, COL_MINUS) == addr
        there = apply_move(spec, addr, ROW_PLUS)
        assert apply_move(spec, there, ROW_MINUS) == addr

    @given(spec_with_addresses(count=1, cube_sizes=(2, 4, 8, 16)), st.data())
    def test_cube_move_is_an_involution(self, spec_and_addr, data):
        spec, (addr,) = spec_and_addr
        dim = data.draw(st.integers(min_value=0, max_value=spec.cube_dim - 1))
        move = cube_move(dim)
        assert apply_move(spec, apply_move(spec, addr, move), move) == addr


class TestDistanceClosed:
    def test_ring_plus_hamming(self):
        spec = teh_spec(2, 2, 8)
        assert distance_closed(spec, NodeAddress(0, 0, 0), NodeAddress(1, 1, 5)) == 4

    def test_wraparound_shortens_rings(self):
        spec = teh_spec(4, 4, 2)
        assert distance_closed(spec, NodeAddress(0, 0, 0), NodeAddress(2, 3, 1)) == 4

    @given(spec_with_addresses(count=1))
    def test_identity(self, spec_and_addr):
        spec, (addr,) = spec_and_addr
        assert distance_closed(spec, addr, addr) == 0

    @given(spec_with_addresses(count=2))
    def test_symmetry(self, spec_and_addrs):
        spec, (a, b) = spec_and_addrs
        assert distance_closed(spec, a, b) == distance_closed(spec, b, a)

    @given(spec_with_addresses(count=2))
    def test_positivity(self, spec_and_addrs):
        spec, (a, b) = spec_and_addrs
        dist = distance_closed(spec, a, b)
        assert dist >= 0
        assert (dist == 0) == (a == b)

    @given(spec_with_addresses(count=3))
    def test_triangle_inequality(self, spec_and_addrs):
        spec, (a, b, c) = spec_and_addrs
        assert distance_closed(spec, a, c) <= (
            distance_closed(spec, a, b) + distance_closed(spec, b, c)
        )

    @given(spec_with_addresses(count=2), st.data())
    def test_translation_and_xor_invariance(self, spec_and_addrs, data):
        spec, (a, b) = spec_and_addrs
        da = data.draw(st.integers(min_value=0, max_value=spec.rows - 1))
        db = data.draw(st.integers(min_value=0, max_value=spec.cols - 1))
        dc = data.draw(st.integers(min_value=0, max_value=spec.cube_nodes - 1))

        def shift(addr):
            return NodeAddress(
                (addr.row + da) % spec.rows,
                (addr.col + db) % spec.cols,
                addr.cube ^ dc,
            )

        assert distance_closed(spec, shift(a), shift(b)) == distance_closed(
            spec, a, b
        )


class TestRoute:
    def test_trivial_path(self):
        path = route(teh_spec(2, 2, 8), NodeAddress(0, 0, 0), NodeAddress(0, 0, 0))
        assert path.hops == (NodeAddress(0, 0, 0),)
        assert path.moves == ()

    def test_fixed_move_order(self):
        # Columns first, then rows, then cube bits ascending.
        path = route(teh_spec(2, 2, 8), NodeAddress(0, 0, 0), NodeAddress(1, 1, 5))
        assert [move.label for move in path.moves] == [
            "col_plus",
            "row_plus",
            "cube_dim_0",
            "cube_dim_2",
        ]

    def test_takes_shorter_wrap_direction(self):
        path = route(teh_spec(4, 4, 2), NodeAddress(0, 3, 0), NodeAddress(0, 0, 0))
        assert path.moves == (COL_PLUS,)

    def test_half_ring_tie_goes_forward(self):
        path = route(teh_spec(4, 4, 2), NodeAddress(0, 0, 0), NodeAddress(2, 0, 0))
        assert path.moves == (ROW_PLUS, ROW_PLUS)

    def test_deterministic(self):
        spec = teh_spec(3, 5, 8)
        src, dst = NodeAddress(0, 1, 3), NodeAddress(2, 4, 6)
        assert route(spec, src, dst) == route(spec, src, dst)

    @given(spec_with_addresses(count=2))
    def test_path_is_valid_and_shortest(self, spec_and_addrs):
        spec, (src, dst) = spec_and_addrs
        path = route(spec, src, dst)
        assert path.hops[0] == src
        assert path.hops[-1] == dst
        assert len(path.hops) == len(path.moves) + 1
        for hop, move, nxt in zip(path.hops, path.moves, path.hops[1:]):
            assert apply_move(spec, hop, move) == nxt
        assert len(set(path.hops)) == len(path.hops)
        assert path.length == distance_closed(spec, src, dst)
        assert path.length <= diameter_closed(spec)

    def test_json_serialization(self):
        path = route(teh_spec(2, 2, 8), NodeAddress(0, 0, 0), NodeAddress(1, 1, 5))
        doc = path.to_json_dict()
        assert doc["hops"][0] == "0,0,0"
        assert doc["moves"][-1] == "cube_dim_2"
        assert doc["length"] == 4


class TestBfsDistance:
    def test_agrees_with_closed_form(self):
        spec = teh_spec(2, 2, 8)
        topology = build_graph(spec)
        assert bfs_distance(topology, NodeAddress(0, 0, 0), NodeAddress(1, 1, 5)) == 4

    @given(spec_with_addresses(count=1))
    def test_identity(self, spec_and_addr):
        spec, (addr,) = spec_and_addr
        assert bfs_distance(build_graph(spec), addr, addr) == 0

    def test_hypercube_distance_is_hamming(self):
        spec = hypercube_spec(8)
        topology = build_graph(spec)
        for a in range(8):
            for b in range(8):
                assert bfs_distance(
                    topology, NodeAddress(0, 0, a), NodeAddress(0, 0, b)
                ) == (a ^ b).bit_count()

    def test_unreachable_on_edgeless_graph(self):
        topology = Topology(spec=teh_spec(2, 2, 2), edges=())
        with pytest.raises(UnreachableError):
            bfs_distance(topology, NodeAddress(0, 0, 0), NodeAddress(1, 1, 1))

    @pytest.mark.parametrize("dims", [(3, 3, 4), (4, 4, 2), (2, 2, 8)])
    def test_all_routes_match_both_oracles(self, dims):
        """route length == closed form == library BFS == external BFS."""
        spec = teh_spec(*dims)
        topology = build_graph(spec)
        oracle = adjacency_by_enumeration(*dims)
        nodes = [decode_address(spec, index) for index in range(spec.node_count)]
        for src in nodes:
            for dst in nodes:
                expected = bfs_dist(oracle, tuple(src), tuple(dst))
                assert distance_closed(spec, src, dst) == expected
                assert bfs_distance(topology, src, dst) == expected
                assert route(spec, src, dst).length == expected

    def test_sampled_pairs_on_a_larger_network(self):
        import random

        spec = teh_spec(8, 8, 16)
        topology = build_graph(spec)
        rng = random.Random(2024)
        for _ in range(1000):
            src = decode_address(spec, rng.randrange(spec.node_count))
            dst = decode_address(spec, rng.randrange(spec.node_count))
            expected = distance_closed(spec, src, dst)
            assert route(spec, src, dst).length == expected
            assert bfs_distance(topology, src, dst) == expected
