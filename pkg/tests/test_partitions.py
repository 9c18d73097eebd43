import random

import pytest
from hypothesis import given, settings, strategies as st

from orient9 import (
    GAP_THRESHOLDS,
    DEFAULT_WEIGHTS,
    InvalidInput,
    Multigraph,
    Partition,
    WeightConstants,
    alpha_k2,
    classify_family,
    is_N_good,
    is_S_good,
    iter_partitions,
    min_weight,
    partition_bound_check,
    refinement_identity,
    triangle,
    weight_of_partition,
)
from orient9.randgen import random_multigraph, random_partition

from _oracles import brute_min_weight, iter_set_partitions


# ----------------------------------------------------------------------
# Partition plumbing
# ----------------------------------------------------------------------


def test_partition_must_cover_disjointly():
    with pytest.raises(InvalidInput):
        Partition([{0, 1}, {1, 2}], 3)  # overlap
    with pytest.raises(InvalidInput):
        Partition([{0}, {2}], 3)  # misses vertex 1
    with pytest.raises(InvalidInput):
        Partition([{0, 1, 2}], 3)  # single block is not allowed


def test_from_assignment_and_sizes():
    P = Partition.from_assignment([0, 1, 0, 2])
    assert P.t == 3
    assert P.sizes == (2, 1, 1)
    assert Partition.trivial(3).t == 3


def test_iter_partitions_counts_match_bell_numbers():
    # partitions of n with t >= 2: Bell(n) - 1
    assert sum(1 for _ in iter_partitions(3)) == 5 - 1
    assert sum(1 for _ in iter_partitions(4)) == 15 - 1
    assert sum(1 for _ in iter_partitions(5)) == 52 - 1


# ----------------------------------------------------------------------
# Weights
# ----------------------------------------------------------------------


def test_weight_constants():
    assert DEFAULT_WEIGHTS.cut_coeff == 23
    assert DEFAULT_WEIGHTS.offset == 42
    assert DEFAULT_WEIGHTS.refinement_constant == 19
    assert WeightConstants(11, 20).refinement_constant == 9


def test_weight_of_singletons_on_stacks():
    # both vertices alone in their blocks: 2e - 2*23 + 42
    assert min_weight(alpha_k2(8))[0] == 12
    assert min_weight(alpha_k2(7))[0] == 10
    assert min_weight(alpha_k2(1))[0] == -2


def test_min_weight_matches_brute_force():
    rng = random.Random(201)
    for _ in range(250):
        G = random_multigraph(rng, 6, 14, min_n=2)
        w, P = min_weight(G)
        assert w == brute_min_weight(G)
        assert weight_of_partition(G, P) == w


def test_min_weight_witness_is_a_real_partition():
    G = triangle(3, 4, 5)
    w, P = min_weight(G)
    assert sorted(v for b in P.blocks for v in b) == [0, 1, 2]
    assert weight_of_partition(G, P) == w


# ----------------------------------------------------------------------
# Family classification
# ----------------------------------------------------------------------


def test_classify_family_boundaries():
    assert classify_family(alpha_k2(7)).in_N
    assert not classify_family(alpha_k2(7)).in_W_star
    assert classify_family(alpha_k2(8)).in_W_star
    assert not classify_family(alpha_k2(8)).in_N
    assert not classify_family(alpha_k2(9)).in_either
    assert classify_family(triangle(5, 5, 5)).in_N  # sum 15
    assert classify_family(triangle(4, 5, 7)).in_W_star  # sum 16, a+b = 9
    assert classify_family(triangle(3, 6, 7)).in_W_star  # sum 16, a+b = 9
    assert classify_family(triangle(2, 7, 7)).in_W_star  # sum 16, delta = 9
    assert not classify_family(triangle(1, 7, 8)).in_either  # sum 16, delta = 8
    assert not classify_family(triangle(6, 6, 6)).in_either  # sum 18


def test_goodness_on_the_stack_family():
    assert not is_N_good(alpha_k2(7)).good  # member of N itself
    assert is_N_good(alpha_k2(8)).good
    assert not is_S_good(alpha_k2(8)).good  # the identity quotient is in W*
    assert is_S_good(alpha_k2(9)).good


# ----------------------------------------------------------------------
# Refinement identity
# ----------------------------------------------------------------------


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=0, max_value=10**9))
def test_refinement_identity_property(seed):
    rng = random.Random(seed)
    G = random_multigraph(rng, 6, 16, min_n=3)
    P = random_partition(rng, G.n)
    big = max(range(P.t), key=lambda i: len(P.blocks[i]))
    block = sorted(P.blocks[big])
    if len(block) < 2:
        return
    cut = rng.randint(1, len(block) - 1)
    ident = refinement_identity(G, P, [block[:cut], block[cut:]], block_index=big)
    assert ident.equal, (ident.lhs, ident.rhs)


def test_refinement_identity_rejects_non_partitions():
    G = alpha_k2(3)
    P = Partition([{0}, {1}], 2)
    with pytest.raises(InvalidInput):
        refinement_identity(G, P, [[0], [0]], block_index=0)


def test_refinement_identity_hand_example():
    # G = triangle(2, 3, 4); P = {0,1} | {2}; Q splits {0,1}.
    G = triangle(2, 3, 4)
    P = Partition([{0, 1}, {2}], 3)
    ident = refinement_identity(G, P, [[0], [1]], block_index=0)
    assert ident.equal
    # lhs: w_H(Q) on H = 2K_2: 2*2 - 2*23 + 42 = 0
    assert ident.lhs == 0


# ----------------------------------------------------------------------
# Bound clauses and gap thresholds
# ----------------------------------------------------------------------


def test_bound_clauses_consistent_on_randoms():
    rng = random.Random(202)
    for _ in range(300):
        G = random_multigraph(rng, 6, 16, min_n=2)
        P = random_partition(rng, G.n)
        rep = partition_bound_check(G, P)
        assert rep.consistent, rep


def test_gap_threshold_table_is_frozen():
    assert GAP_THRESHOLDS == (
        (2, 1, 9),
        (3, 1, 16),
        (2, 2, 18),
        (4, 1, 20),
        (3, 2, 25),
        (3, 3, 32),
    )


def test_oracle_partition_generator_agrees_with_package():
    # same count of t >= 2 partitions for n = 4 (sanity of the test oracle)
    ours = sum(1 for p in iter_set_partitions(range(4)) if len(p) >= 2)
    assert ours == sum(1 for _ in iter_partitions(4))
