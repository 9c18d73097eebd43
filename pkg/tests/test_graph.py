import math
import random

import pytest

from orient9 import (
    InvalidInput,
    Multigraph,
    contract_partition,
    contract_subset,
    edge_connectivity,
    odd_edge_connectivity,
    odd_girth,
)
from orient9.randgen import random_multigraph

from _oracles import (
    brute_edge_connectivity,
    brute_odd_edge_connectivity,
    brute_odd_girth,
)


def test_from_multiplicities_round_trip():
    G = Multigraph.from_multiplicities(3, {(0, 1): 3, (1, 2): 2})
    assert G.n == 3
    assert G.num_edges() == 5
    assert G.mu(0, 1) == G.mu(1, 0) == 3
    assert G.mu(1, 2) == 2
    assert G.mu(0, 2) == 0
    assert G.degrees() == (3, 5, 2)


def test_edge_ids_assigned_in_order():
    G = Multigraph.from_pairs(3, [(0, 1), (1, 2), (0, 1)])
    assert G.edge_ids() == (0, 1, 2)
    assert G.edge(0).pair == (0, 1)
    assert G.edge(1).pair == (1, 2)
    assert G.edge(2).pair == (0, 1)


def test_loops_rejected():
    with pytest.raises(InvalidInput):
        Multigraph.from_pairs(2, [(1, 1)])


def test_pair_classes_ascending():
    G = Multigraph.from_pairs(3, [(0, 1), (1, 2), (0, 1), (1, 2), (0, 1)])
    classes = G.pair_classes()
    assert classes[(0, 1)] == (0, 2, 4)
    assert classes[(1, 2)] == (1, 3)


def test_structural_equality_uses_ids():
    A = Multigraph.from_pairs(2, [(0, 1), (0, 1)])
    B = Multigraph.from_pairs(2, [(0, 1), (0, 1)])
    assert A == B
    C = Multigraph.from_pairs(2, [(0, 1)])
    assert A != C


def test_induced_subgraph_preserves_edge_ids_and_sides():
    G = Multigraph.from_pairs(4, [(0, 1), (1, 2), (2, 3), (3, 1)])
    H, vmap = G.induced_subgraph([1, 2, 3])
    assert set(H.edge_ids()) == {1, 2, 3}
    # stored side order must survive the renumbering
    assert (H.edge(3).u, H.edge(3).v) == (vmap[3], vmap[1])


def test_contract_subset_drops_internal_edges():
    G = Multigraph.from_pairs(4, [(0, 1), (0, 1), (1, 2), (2, 3), (0, 3)])
    res = contract_subset(G, [0, 1])
    assert res.graph.n == 3
    assert res.graph.num_edges() == 3  # the two 0-1 parallels disappear
    assert res.vertex_map[0] == res.vertex_map[1]


def test_contract_partition_keeps_cross_edges():
    G = Multigraph.from_pairs(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    res = contract_partition(G, [{0, 1}, {2, 3}])
    assert res.graph.n == 2
    assert res.graph.num_edges() == 2


def test_odd_edge_connectivity_matches_brute_force():
    rng = random.Random(101)
    for _ in range(250):
        G = random_multigraph(rng, 5, 12, min_n=2)
        got, cut = odd_edge_connectivity(G)
        want = brute_odd_edge_connectivity(G)
        if not G.is_connected():
            assert got == 0
            continue
        assert got == want
        if cut is not None and got not in (0, math.inf):
            from _oracles import brute_cut_size

            assert brute_cut_size(G, cut) == got


def test_even_graph_has_infinite_odd_connectivity():
    G = Multigraph.from_multiplicities(2, {(0, 1): 6})
    assert odd_edge_connectivity(G)[0] == math.inf


def test_edge_connectivity_matches_brute_force():
    rng = random.Random(102)
    for _ in range(200):
        G = random_multigraph(rng, 5, 12, min_n=2)
        if not G.is_connected():
            continue
        got, cut = edge_connectivity(G)
        assert got == brute_edge_connectivity(G)
        from _oracles import brute_cut_size

        assert brute_cut_size(G, cut) == got


def test_odd_girth_matches_double_cover_oracle():
    rng = random.Random(103)
    for _ in range(250):
        G = random_multigraph(rng, 6, 10, min_n=2)
        got, cycle = odd_girth(G)
        assert got == brute_odd_girth(G)
        if cycle is not None:
            assert len(cycle) == got
            assert len(set(cycle)) == got  # simple
            for i in range(got):
                assert G.mu(cycle[i], cycle[(i + 1) % got]) >= 1


def test_odd_girth_of_digon_pair_is_infinite():
    G = Multigraph.from_multiplicities(2, {(0, 1): 5})
    # parallel edges make 2-cycles, which are even; no odd cycle exists
    assert odd_girth(G)[0] == math.inf
