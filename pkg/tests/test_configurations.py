"""Forbidden-configuration catalog: detection, symmetry dedup, lift recipes."""

import random
from collections import Counter

import pytest

from orient9 import InvalidInput
from orient9.configurations import (
    CATALOG,
    apply_lift_recipe,
    detect_config,
    pattern_by_name,
)
from orient9.graph import Multigraph

from _oracles import brute_config_matches

TERMINAL = {"8K_2", "multi-K_4", "6C_4^+"}

# multiplicity multiset of each target's minimal shape
TARGET_SHAPE = {
    "8K_2": [8],
    "6C_4^+": [6, 6, 6, 7],
    "T_{5,5,6}": [5, 5, 6],
}


def pair_multiplicities(G: Multigraph) -> list[int]:
    counts = Counter()
    for e in G.edges:
        counts[(min(e.u, e.v), max(e.u, e.v))] += 1
    return sorted(counts.values())


class TestCatalog:
    def test_fourteen_distinct_entries(self):
        assert len(CATALOG) == 14
        assert len({p.name for p in CATALOG}) == 14

    def test_name_lookup_is_notation_tolerant(self):
        assert pattern_by_name("8K_2").name == "8K_2"
        assert pattern_by_name("8k2").name == "8K_2"
        assert pattern_by_name("T{1,1,7}").name == "T_{1,1,7}"
        assert pattern_by_name("6c4+").name == "6C_4^+"
        with pytest.raises(InvalidInput):
            pattern_by_name("9K_2")

    def test_terminal_entries_have_no_recipe_and_vice_versa(self):
        for pat in CATALOG:
            if pat.name in TERMINAL:
                assert pat.recipe == () and pat.target is None
            else:
                assert pat.recipe and pat.target in TARGET_SHAPE

    def test_minimal_instances_match_their_own_template_once(self):
        for pat in CATALOG:
            G = pat.minimal_instance()
            matches = detect_config(G, pat.name)
            assert len(matches) == 1, pat.name
            m = matches[0]
            assert m.pattern == pat.name
            assert len(m.edges) == pat.min_edges()
            assert all(0 <= eid < G.num_edges() for eid in m.edges)

    def test_match_edges_reference_the_right_pairs(self):
        pat = pattern_by_name("T_{2,2,6}")
        G = pat.minimal_instance()
        (m,) = detect_config(G, pat.name)
        counts = Counter()
        for eid in m.edges:
            e = G.edge(eid)
            counts[tuple(sorted((e.u, e.v)))] += 1
        assert counts == {(0, 1): 6, (0, 2): 2, (1, 2): 2}


class TestDetection:
    def test_agrees_with_exhaustive_injection(self, rng: random.Random):
        for _ in range(150):
            n = rng.randint(2, 6)
            mult = {}
            for u in range(n):
                for v in range(u + 1, n):
                    if rng.random() < 0.55:
                        mult[(u, v)] = rng.randint(1, 8)
            if not mult:
                mult[(0, 1)] = rng.randint(1, 8)
            G = Multigraph.from_multiplicities(n, mult)
            for pat in CATALOG:
                got = {m.assignment for m in detect_config(G, pat.name)}
                assert got == brute_config_matches(G, pat), pat.name

    def test_containment_is_monotone(self):
        for pat in CATALOG:
            G = pat.minimal_instance()
            heavier, _ = G.with_extra_edges([(pat.thresholds[0][0][0], pat.thresholds[0][0][1])])
            assert any(m.pattern == pat.name for m in detect_config(heavier, pat.name))

    def test_symmetry_orbit_counts_once(self):
        # a fully symmetric 5/5/5 triangle hosts T_{3,3,5} in 3 canonical ways
        # (choice of the heavy side), not 6
        G = Multigraph.from_multiplicities(3, {(0, 1): 5, (0, 2): 5, (1, 2): 5})
        matches = detect_config(G, "T_{3,3,5}")
        assert len(matches) == 3
        assert all(m.assignment == min(
            m.assignment, (m.assignment[1], m.assignment[0], m.assignment[2])
        ) for m in matches)


class TestLiftRecipes:
    @pytest.mark.parametrize(
        "pat", [p for p in CATALOG if p.recipe], ids=lambda p: p.name
    )
    def test_minimal_instance_collapses_to_its_target(self, pat):
        G = pat.minimal_instance()
        (match,) = detect_config(G, pat.name)
        lifted, created = apply_lift_recipe(G, match)
        assert len(created) == len(pat.recipe)
        # path vertices lose both their edges; what is left is the target
        # shape (possibly with isolated former path vertices)
        assert pair_multiplicities(lifted) == TARGET_SHAPE[pat.target]
        if pat.target in {p.name for p in CATALOG}:
            assert detect_config(lifted, pat.target), (
                f"{pat.name} lift does not expose {pat.target}"
            )

    @pytest.mark.parametrize("name", sorted(TERMINAL))
    def test_terminal_entries_refuse_to_lift(self, name):
        pat = pattern_by_name(name)
        G = pat.minimal_instance()
        (match,) = detect_config(G, name)
        with pytest.raises(InvalidInput, match="terminal"):
            apply_lift_recipe(G, match)

    def test_lift_preserves_untouched_edges(self):
        pat = pattern_by_name("T_{1,1,7}")
        G, _ = pat.minimal_instance().with_extra_edges([(0, 1)])
        (match,) = detect_config(G, pat.name)
        lifted, _ = apply_lift_recipe(G, match)
        # 7 threshold parallels + 1 extra + 1 created by the lift
        assert pair_multiplicities(lifted) == [9]
