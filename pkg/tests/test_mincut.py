from fractions import Fraction

import pytest

from mimicknet.errors import OracleCapacityError
from mimicknet.generate import random_planar_network
from mimicknet.lowerbound import gen_bipartite, gen_grid
from mimicknet.mincut import (
    gap,
    global_gap,
    min_cut_between,
    min_cut_oracle,
    min_separating_cut,
    oracle_enumeration,
    uniqueness_by_flow,
)
from mimicknet.network import Bipartition, Network, enumerate_bipartitions

PATH_35 = Network(3, [(0, 1, 3), (1, 2, 5)], [0, 2])
BP2 = enumerate_bipartitions(2)[0]


class TestMinSeparatingCut:
    def test_series_edges_min(self):
        cut = min_separating_cut(PATH_35, BP2)
        assert cut.value == 3
        assert cut.cutset == frozenset({0})
        assert cut.side == frozenset({0})

    def test_disconnected_terminals(self):
        net = Network(2, [], [0, 1])
        cut = min_separating_cut(net, BP2)
        assert cut.value == 0 and cut.cutset == frozenset()

    def test_grid_k4_staircase_value(self):
        # 5 - 6/256: two epsilon-bearing horizontal edges on row 3
        fam = gen_grid(4)
        bp = Bipartition.from_mask(8, fam.subset_mask(2, 3))
        cut = min_separating_cut(fam.network, bp)
        assert cut.value == Fraction(637, 128)

    def test_cutset_matches_side_and_value(self):
        net, _ = random_planar_network(14, 4, seed=21)
        for bp in enumerate_bipartitions(4):
            cut = min_separating_cut(net, bp)
            crossing = frozenset(
                eid
                for eid, e in enumerate(net.edges)
                if (e.u in cut.side) != (e.v in cut.side)
            )
            assert crossing == cut.cutset
            assert sum((net.edges[i].cost for i in cut.cutset), Fraction(0)) == cut.value
            assert cut.side & set(net.terminals) == set(bp.coside_vertices(net))

    def test_parallel_edges_count_individually(self):
        net = Network(2, [(0, 1, 2), (0, 1, 3)], [0, 1])
        cut = min_separating_cut(net, BP2)
        assert cut.value == 5 and cut.cutset == frozenset({0, 1})

    def test_self_loop_never_cut(self):
        net = Network(2, [(0, 0, 100), (0, 1, 4)], [0, 1])
        cut = min_separating_cut(net, BP2)
        assert cut.value == 4 and cut.cutset == frozenset({1})


class TestOracle:
    def test_path(self):
        value, cutsets = min_cut_oracle(PATH_35, BP2)
        assert value == 3 and cutsets == frozenset({frozenset({0})})

    def test_symmetric_cycle_lists_all(self):
        net = Network(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)], [0, 2])
        value, cutsets = min_cut_oracle(net, BP2)
        assert value == 2
        assert cutsets == frozenset(
            {frozenset({0, 3}), frozenset({1, 3}), frozenset({0, 2}), frozenset({1, 2})}
        )

    def test_bipartite_k6_unique_expected_side(self):
        fam = gen_bipartite(6)
        subset = fam.subsets[2]
        bp = Bipartition.from_indices(6, subset)
        value, cutsets = min_cut_oracle(fam.network, bp)
        assert len(cutsets) == 1
        expected_w = {fam.u_vertex(2)} | (set(range(6)) - set(subset))
        expected_cutset = frozenset(
            eid
            for eid, e in enumerate(fam.network.edges)
            if (e.u in expected_w) != (e.v in expected_w)
        )
        assert cutsets == frozenset({expected_cutset})
        assert min_separating_cut(fam.network, bp).value == value

    def test_capacity_limit(self):
        n = 26  # n - k = 24 > 22
        net = Network(n, [(i, i + 1, 1) for i in range(n - 1)], [0, n - 1])
        with pytest.raises(OracleCapacityError):
            min_cut_oracle(net, BP2)
        with pytest.raises(OracleCapacityError):
            gap(net, BP2, require_delta=True)
        rep = gap(net, BP2)
        assert rep.delta is None and rep.exhaustive is False and rep.unique is False

    @pytest.mark.parametrize("seed", range(8))
    def test_flow_agrees_with_oracle(self, seed):
        net, _ = random_planar_network(12, 3, seed=seed)
        for bp in enumerate_bipartitions(3):
            res = oracle_enumeration(net, bp)
            cut = min_separating_cut(net, bp)
            assert cut.value == res.value
            assert cut.cutset in res.min_cutsets
            assert uniqueness_by_flow(net, bp) == (len(res.min_cutsets) == 1)

    def test_bigint_fallback_is_exact(self):
        # costs too large for the int64 kernels force the Gray-code path
        huge = 10**40
        net = Network(
            4,
            [(0, 1, huge), (1, 2, huge + 7), (1, 3, 3), (3, 2, huge - 1)],
            [0, 2],
        )
        value, cutsets = min_cut_oracle(net, BP2)
        assert value == huge  # cheapest: cut (0,1)
        assert min_separating_cut(net, BP2).value == value
        rep = gap(net, BP2)
        assert rep.unique and rep.delta == 10  # second best: {(1,2),(1,3)} = huge + 10


class TestGap:
    def test_path_gap(self):
        rep = gap(PATH_35, BP2)
        assert rep.delta == 2 and rep.second_best == 5 and rep.unique

    def test_tied_cycle(self):
        net = Network(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)], [0, 2])
        rep = gap(net, BP2)
        assert rep.delta == 0 and not rep.unique

    def test_single_cut_instance(self):
        net = Network(2, [(0, 1, 7)], [0, 1])
        rep = gap(net, BP2)
        assert rep.delta is None and rep.unique

    def test_grid_k4_staircase_unique(self):
        fam = gen_grid(4)
        bp = Bipartition.from_mask(8, fam.subset_mask(1, 1))
        rep = gap(fam.network, bp)
        assert rep.unique and rep.delta > 0

    def test_global_gap_path(self):
        assert global_gap(PATH_35) == 2


class TestUniquenessByFlow:
    def test_path_unique(self):
        assert uniqueness_by_flow(PATH_35, BP2)

    def test_cycle_not_unique(self):
        net = Network(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)], [0, 2])
        assert not uniqueness_by_flow(net, BP2)

    def test_bipartite_k6_all_subsets_unique(self):
        fam = gen_bipartite(6)
        for subset in fam.subsets:
            bp = Bipartition.from_indices(6, subset)
            assert uniqueness_by_flow(fam.network, bp)


class TestMinCutBetween:
    def test_star_pair(self):
        net = Network(4, [(0, 3, 1), (1, 3, 1), (2, 3, 1)], [0, 1, 2])
        cut = min_cut_between(net, [0], [1])
        assert cut.value == 1

    def test_matches_bipartition_when_pair_covers(self):
        net, _ = random_planar_network(10, 3, seed=4)
        for bp in enumerate_bipartitions(3):
            a = min_separating_cut(net, bp).value
            b = min_cut_between(net, bp.coside_indices(), bp.side_indices()).value
            assert a == b
