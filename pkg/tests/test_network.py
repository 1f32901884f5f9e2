from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mimicknet.errors import (
    InvalidEdgeError,
    InvalidParameterError,
    InvalidTerminalCountError,
    TerminalCollisionError,
)
from mimicknet.network import (
    Bipartition,
    ContractionMap,
    Network,
    connected_components,
    contract,
    enumerate_bipartitions,
)


def small_networks():
    """Random little multigraphs for property tests."""

    @st.composite
    def build(draw):
        n = draw(st.integers(2, 7))
        m = draw(st.integers(0, 12))
        edges = [
            (
                draw(st.integers(0, n - 1)),
                draw(st.integers(0, n - 1)),
                Fraction(draw(st.integers(1, 30)), draw(st.integers(1, 8))),
            )
            for _ in range(m)
        ]
        k = draw(st.integers(2, n))
        terminals = draw(st.permutations(range(n)))[:k]
        return Network(n, edges, terminals)

    return build()


class TestBipartitions:
    def test_k2_single_split(self):
        bps = enumerate_bipartitions(2)
        assert [bp.mask for bp in bps] == [0b10]
        assert bps[0].side_indices() == (1,)
        assert bps[0].coside_indices() == (0,)

    def test_k3_three_splits(self):
        bps = enumerate_bipartitions(3)
        assert [bp.side_indices() for bp in bps] == [(1,), (2,), (1, 2)]

    def test_k6_count(self):
        assert len(enumerate_bipartitions(6)) == 31

    def test_k_below_two_rejected(self):
        with pytest.raises(InvalidTerminalCountError):
            enumerate_bipartitions(1)

    @pytest.mark.parametrize("k", [2, 3, 4, 5, 8])
    def test_canonical_and_distinct(self, k):
        bps = enumerate_bipartitions(k)
        masks = [bp.mask for bp in bps]
        assert len(set(masks)) == len(masks) == 2 ** (k - 1) - 1
        assert all(mask & 1 == 0 for mask in masks)
        assert masks == sorted(masks)
        assert [bp.row_index for bp in bps] == list(range(len(bps)))

    def test_from_indices_canonicalizes(self):
        bp = Bipartition.from_indices(3, [0, 2])  # contains terminal 0 -> complement
        assert bp.side_indices() == (1,)

    def test_trivial_masks_rejected(self):
        with pytest.raises(InvalidParameterError):
            Bipartition.from_mask(3, 0)
        with pytest.raises(InvalidParameterError):
            Bipartition.from_mask(3, 0b111)


class TestConnectedComponents:
    def test_path_with_removed_edge(self):
        net = Network(3, [(0, 1, 1), (1, 2, 1)], [0, 2])
        comps = connected_components(net, {0})
        assert comps == [frozenset({0}), frozenset({1, 2})]

    def test_connected_whole(self):
        net = Network(3, [(0, 1, 1), (1, 2, 1)], [0, 2])
        assert connected_components(net) == [frozenset({0, 1, 2})]

    def test_four_cycle_opposite_edges(self):
        net = Network(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)], [0, 2])
        comps = connected_components(net, {0, 2})
        assert sorted(len(c) for c in comps) == [2, 2]

    def test_unknown_edge_id(self):
        net = Network(2, [(0, 1, 1)], [0, 1])
        with pytest.raises(InvalidEdgeError):
            connected_components(net, {5})

    @settings(max_examples=40, deadline=None)
    @given(small_networks(), st.randoms(use_true_random=False))
    def test_partition_property(self, net, rng):
        removed = {i for i in range(net.m) if rng.random() < 0.4}
        comps = connected_components(net, removed)
        everything = [v for comp in comps for v in comp]
        assert sorted(everything) == list(range(net.n))


class TestContract:
    def test_triangle_pair_merge(self):
        net = Network(3, [(0, 1, 1), (1, 2, 1), (2, 0, 1)], [0, 2])
        cmap = ContractionMap(net, [[0], [1, 2]])
        out = contract(net, cmap)
        assert out.n == 2 and out.m == 1
        assert out.edges[0].cost == 2

    def test_identity_map(self):
        net = Network(3, [(0, 1, Fraction(3, 7)), (1, 2, 5)], [0, 2])
        out = contract(net, ContractionMap.identity(net))
        assert out == net

    def test_star_singletons_unchanged(self):
        k = 4
        net = Network(k + 1, [(i, k, 1) for i in range(k)], range(k))
        out = contract(net, ContractionMap.identity(net))
        assert out.n == 5 and out.m == 4
        assert out.terminals == (0, 1, 2, 3)

    def test_terminal_collision(self):
        net = Network(3, [(0, 1, 1), (1, 2, 1)], [0, 2])
        with pytest.raises(TerminalCollisionError):
            ContractionMap(net, [[0, 2], [1]])

    def test_partition_must_cover(self):
        net = Network(3, [(0, 1, 1), (1, 2, 1)], [0, 2])
        with pytest.raises(InvalidParameterError):
            ContractionMap(net, [[0], [1]])

    @settings(max_examples=40, deadline=None)
    @given(small_networks(), st.randoms(use_true_random=False))
    def test_cost_conservation(self, net, rng):
        # total output cost = total input cost minus intra-class cost, exactly
        n_classes = rng.randint(1, net.n)
        assignment = [rng.randrange(n_classes) for _ in range(net.n)]
        groups = {}
        for v, c in enumerate(assignment):
            groups.setdefault(c, []).append(v)
        try:
            cmap = ContractionMap(net, groups.values())
        except TerminalCollisionError:
            return
        out = contract(net, cmap)
        intra = sum(
            (e.cost for e in net.edges if cmap.class_of[e.u] == cmap.class_of[e.v]),
            Fraction(0),
        )
        assert out.total_cost() == net.total_cost() - intra


class TestNetworkValidation:
    def test_nonpositive_cost(self):
        with pytest.raises(InvalidParameterError):
            Network(2, [(0, 1, 0)], [0, 1])

    def test_duplicate_terminals(self):
        with pytest.raises(InvalidTerminalCountError):
            Network(2, [(0, 1, 1)], [0, 0])

    def test_edge_out_of_range(self):
        with pytest.raises(InvalidEdgeError):
            Network(2, [(0, 5, 1)], [0, 1])

    def test_costs_stay_fractions(self):
        net = Network(2, [(0, 1, Fraction(7, 3))], [0, 1])
        assert net.edges[0].cost == Fraction(7, 3)
        assert net.cost_denominator == 3
