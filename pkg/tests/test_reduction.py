"""Reduction machinery: splitting, gap extraction, certificates, the 9-solver."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from orient9 import InvalidInput
from orient9.graph import Multigraph, lift_pair, odd_edge_connectivity
from orient9.orientations import check_zk_orientation, modular_orientation, ZkBoundary
from orient9.partitions import Partition, min_weight
from orient9.randgen import random_heavy_cycle, random_multigraph
from orient9.reduction import (
    DEFAULT_SOLVE,
    SCALED_SOLVE,
    SolveConstants,
    gap_lemma_extract,
    solve_modular_9,
    theorem_1_12_witness,
    zhang_split,
)

from _oracles import orientation_boundary


def ak2(alpha: int) -> Multigraph:
    return Multigraph.from_multiplicities(2, {(0, 1): alpha})


def tri(a: int, b: int, c: int) -> Multigraph:
    return Multigraph.from_multiplicities(3, {(0, 1): a, (0, 2): b, (1, 2): c})


class TestLiftPair:
    def test_degree_bookkeeping(self):
        G = tri(2, 2, 2)
        res = lift_pair(G, 2, 0, 1)
        assert res.graph.degree(2) == G.degree(2) - 2
        assert res.graph.mu(0, 1) == 3
        assert res.graph.edge(res.new_edge_id).id == res.new_edge_id
        assert all(res.graph.edge(eid) for eid in res.graph.edge_ids())
        for rid in res.removed_edge_ids:
            assert rid not in res.graph.edge_ids()

    def test_requires_three_distinct_vertices_and_edges(self):
        G = tri(2, 2, 2)
        with pytest.raises(InvalidInput):
            lift_pair(G, 0, 0, 1)
        H = Multigraph.from_pairs(3, [(0, 1)])
        with pytest.raises(InvalidInput):
            lift_pair(H, 1, 0, 2)


class TestZhangSplit:
    def test_splits_and_preserves_odd_connectivity(self):
        G = tri(1, 2, 2)  # lambda_odd = 3, d(2) = 4
        assert odd_edge_connectivity(G)[0] == 3
        pos, split = zhang_split(G, 2)
        assert split.degree(2) == 2
        assert odd_edge_connectivity(split)[0] == 3

    def test_rejects_below_the_connectivity_hypothesis(self):
        star = Multigraph.from_pairs(4, [(0, 1), (0, 2), (0, 3)])
        assert odd_edge_connectivity(star)[0] == 1
        with pytest.raises(InvalidInput, match="at least 3"):
            zhang_split(star, 0)

    def test_rejects_degree_two_and_degree_lambda(self):
        _, split = zhang_split(tri(1, 2, 2), 2)  # leaves vertex 2 with degree 2
        with pytest.raises(InvalidInput, match="degree"):
            zhang_split(split, 2)
        with pytest.raises(InvalidInput, match="equal to the odd-edge-connectivity"):
            zhang_split(ak2(5), 0)

    @settings(max_examples=150, deadline=None)
    @given(st.integers(0, 10**9))
    def test_exact_preservation_property(self, seed: int):
        rng = random.Random(seed)
        G = random_multigraph(rng, 5, 12)
        lam, _ = odd_edge_connectivity(G)
        if lam == float("inf") or lam < 3:
            return
        candidates = [v for v in range(G.n) if G.degree(v) >= 3 and G.degree(v) != lam]
        if not candidates:
            return
        v = rng.choice(candidates)
        _, split = zhang_split(G, v)
        assert odd_edge_connectivity(split)[0] == lam


class TestGapExtraction:
    def test_above_threshold_is_not_applicable(self):
        ge = gap_lemma_extract(tri(8, 8, 8), Partition([{0, 1}, {2}], 3))
        assert not ge.applicable
        assert (ge.weight, ge.threshold) == (28, 9)
        assert ge.block is None and not ge.found

    def test_below_threshold_extracts_the_heavy_block(self):
        ge = gap_lemma_extract(tri(8, 1, 1), Partition([{0, 1}, {2}], 3))
        assert ge.applicable and ge.found
        assert ge.block == frozenset({0, 1})
        assert ge.subgraph.num_edges() == 8
        assert ge.report is not None and ge.report.good

    def test_below_threshold_may_still_fail(self):
        ge = gap_lemma_extract(tri(2, 2, 2), Partition([{0, 1}, {2}], 3))
        assert ge.applicable and not ge.found
        assert "not N-good" in ge.note

    def test_partition_guards(self):
        with pytest.raises(InvalidInput):
            gap_lemma_extract(tri(2, 2, 2), Partition([{0, 1}, {2}, {3}], 4))
        with pytest.raises(InvalidInput):
            gap_lemma_extract(tri(2, 2, 2), Partition.trivial(3))


class TestReductionWitness:
    def test_small_graphs_certify_by_size(self):
        for G in (ak2(9), ak2(10)):
            cert = theorem_1_12_witness(G)
            assert cert is not None and cert.clause == 4
            assert cert.lifts == ()

    def test_planted_heavy_pair_certifies_by_subgraph(self):
        G = Multigraph.from_multiplicities(
            5, {(0, 1): 8, (1, 2): 8, (2, 3): 8, (3, 4): 8, (0, 4): 8}
        )
        assert min_weight(G)[0] == 7
        cert = theorem_1_12_witness(G)
        assert cert is not None
        assert cert.clause == 1
        assert cert.subgraph_vertices == (0, 1)
        assert cert.subgraph_report is not None and cert.subgraph_report.good

    def test_lifting_clause_on_a_dense_six_vertex_instance(self):
        # no proper induced subgraph is N-good here, but a single lift of the
        # path 1-0-2 makes the whole graph N-good (contraction: one vertex)
        G = Multigraph.from_multiplicities(
            6,
            {(0, 1): 4, (0, 2): 5, (0, 4): 6, (1, 3): 7, (1, 5): 5,
             (2, 3): 4, (2, 5): 7, (3, 4): 7, (4, 5): 4},
        )
        assert min_weight(G)[0] == 2
        cert = theorem_1_12_witness(G)
        assert cert is not None and cert.clause == 2
        assert cert.lifts == ((0, 1, 2),)
        assert cert.subgraph_vertices == (0, 1, 2, 3, 4, 5)
        assert cert.subgraph_report is not None and cert.subgraph_report.good

    def test_rejects_negative_weight(self):
        with pytest.raises(InvalidInput, match="weight"):
            theorem_1_12_witness(tri(4, 4, 4))

    def test_rejects_tiny_or_disconnected_input(self):
        with pytest.raises(InvalidInput):
            theorem_1_12_witness(Multigraph(1, []))
        with pytest.raises(InvalidInput):
            theorem_1_12_witness(Multigraph.from_multiplicities(4, {(0, 1): 9, (2, 3): 9}))


class TestSolver:
    @pytest.mark.parametrize("alpha", [8, 10, 23, 24])
    def test_parallel_stacks_solve(self, alpha: int):
        G = ak2(alpha)
        D = solve_modular_9(G)
        assert check_zk_orientation(G, D, 9, ZkBoundary.zero(9, 2))

    def test_even_triangle_solves(self):
        # all cuts even, so the connectivity hypothesis holds vacuously
        G = tri(8, 8, 8)
        D = solve_modular_9(G)
        assert orientation_boundary(G, D, 9) == (0, 0, 0)

    def test_rejects_low_odd_connectivity(self):
        with pytest.raises(InvalidInput, match="odd-edge-connectivity"):
            solve_modular_9(ak2(9))  # lambda_odd = 9 < 23

    def test_rejects_disconnected_and_empty(self):
        with pytest.raises(InvalidInput):
            solve_modular_9(Multigraph(0, []))
        with pytest.raises(InvalidInput):
            solve_modular_9(Multigraph.from_multiplicities(4, {(0, 1): 23, (2, 3): 23}))

    def test_scaled_constants_match_direct_dp(self, rng: random.Random):
        done = 0
        while done < 10:
            G = random_heavy_cycle(rng, length_range=(2, 5))
            if odd_edge_connectivity(G)[0] < SCALED_SOLVE.lam:
                continue
            done += 1
            D = solve_modular_9(G, constants=SCALED_SOLVE)
            direct = modular_orientation(G, 5)
            assert direct is not None
            assert D.tails == direct.tails

    def test_constants_expose_modulus(self):
        assert DEFAULT_SOLVE.modulus == 9
        assert SCALED_SOLVE.modulus == 5
        assert SolveConstants(3, 17).modulus == 7
