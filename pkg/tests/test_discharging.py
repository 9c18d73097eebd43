"""Face charging: classification, weak adjacency, rules, exact case table."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from orient9 import FalsificationEvent, InvalidInput
from orient9.discharging import (
    CHARGE_DENOMINATOR,
    TARGET_CHARGE,
    TARGET_UNITS,
    apply_rules,
    case_table_verify,
    classify_faces,
    euler_density_check,
    t444_exclusion_check,
    verdict,
    weak_adjacency_map,
    weakly_adjacent,
)
from orient9.embedding import embed_cycle, embed_cycle_multigraph, embed_two_vertex
from orient9.randgen import random_embedded


class TestClassification:
    def test_cycle_multigraph_kinds(self):
        emb = embed_cycle_multigraph((4, 4, 4))
        classes = classify_faces(emb.graph, emb)
        kinds = sorted(c.kind for c in classes)
        assert kinds.count("triangle") == 2
        assert kinds.count("2-face") == 9
        tri = [c for c in classes if c.kind == "triangle"]
        assert all(c.params == (4, 4, 4) and c.sigma == 12 for c in tri)

    def test_big_and_pentagon_kinds(self):
        emb = embed_cycle(6)
        classes = classify_faces(emb.graph, emb)
        assert {c.kind for c in classes} == {"big"}
        emb5 = embed_cycle(5)
        classes5 = classify_faces(emb5.graph, emb5)
        assert {c.kind for c in classes5} == {"pentagon"}
        assert all(c.params == (1, 1, 1, 1, 1) for c in classes5)

    def test_digon_params_carry_class_multiplicity(self):
        emb = embed_two_vertex(8)
        classes = classify_faces(emb.graph, emb)
        assert all(c.kind == "2-face" and c.params == (8,) for c in classes)


class TestWeakAdjacency:
    def test_faces_across_a_digon_chain_are_weakly_adjacent(self):
        # the 5-fold side produces a chain of four digons; the two 3-faces
        # on its far sides see each other through the chain
        emb = embed_cycle_multigraph((5, 1, 1))
        big = [f.index for f in emb.faces if f.degree == 3]
        assert len(big) == 2
        assert weakly_adjacent(emb, big[0], big[1])

    def test_weak_adjacency_records_the_crossed_class(self):
        emb = embed_cycle_multigraph((5, 1, 1))
        weak = weak_adjacency_map(emb)
        big = [f.index for f in emb.faces if f.degree == 3]
        assert (0, 1) in weak[big[0]][big[1]]

    def test_digons_are_not_weakly_adjacent_to_themselves(self):
        emb = embed_two_vertex(4)
        weak = weak_adjacency_map(emb)
        for f, neighbours in enumerate(weak):
            assert f not in neighbours


class TestEulerDensity:
    def test_threshold_is_2e_versus_23v_minus_42(self):
        # 2 vertices, 8 edges: 16 >= 46 - 42 = 4
        emb = embed_two_vertex(8)
        assert euler_density_check(emb.graph, emb)
        sparse = embed_cycle(9)  # 18 < 207 - 42
        assert not euler_density_check(sparse.graph, sparse)

    def test_agrees_with_the_inequality_on_random_embeddings(self, rng: random.Random):
        for _ in range(50):
            emb = random_embedded(rng, steps=rng.randrange(3, 12))
            G = emb.graph
            assert euler_density_check(G, emb) == (2 * G.num_edges() >= 23 * G.n - 42)


class TestRules:
    def test_initial_charge_is_twice_the_edge_count(self, rng: random.Random):
        for _ in range(30):
            emb = random_embedded(rng, steps=rng.randrange(3, 10))
            ledger = apply_rules(emb.graph, emb)
            assert sum(ledger.initial_units) == CHARGE_DENOMINATOR * 2 * emb.graph.num_edges()
            assert ledger.conserved

    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 10**9))
    def test_conservation_property(self, seed: int):
        rng = random.Random(seed)
        emb = random_embedded(rng, steps=rng.randrange(3, 12))
        ledger = apply_rules(emb.graph, emb)
        assert ledger.conserved
        for t in ledger.transfers:
            assert t.rule in {"A", "B-Q", "B-T", "C"}
            assert t.units > 0
            assert t.giver != t.receiver

    def test_determinism(self, rng: random.Random):
        emb = random_embedded(rng, steps=8)
        a = apply_rules(emb.graph, emb)
        b = apply_rules(emb.graph, emb)
        assert a.transfers == b.transfers
        assert a.final_units == b.final_units

    def test_rejects_foreign_embedding(self):
        a = embed_cycle(4)
        b = embed_cycle(5)
        with pytest.raises(InvalidInput):
            apply_rules(a.graph, b)

    def test_csv_log_shape(self):
        emb = embed_cycle_multigraph((5, 5, 5, 5))
        ledger = apply_rules(emb.graph, emb)
        lines = ledger.transfers_csv().strip().splitlines()
        assert lines[0] == "from_face,to_face,rule,class,amount"
        assert len(lines) == len(ledger.transfers) + 1


class TestVerdict:
    def test_heavy_quadrilateral_discharges_exactly(self):
        emb = embed_cycle_multigraph((5, 5, 5, 5))
        ledger = apply_rules(emb.graph, emb)
        assert verdict(ledger) == []
        charges = {ledger.charge(i) for i in range(ledger.num_faces)}
        assert charges == {Fraction(46, 21), Fraction(52, 21)}
        assert min(ledger.final_units) == TARGET_UNITS

    def test_parallel_stack_fails_with_a_catalog_match(self):
        emb = embed_two_vertex(8)
        ledger = apply_rules(emb.graph, emb)
        reports = verdict(ledger)
        assert len(reports) == 8  # every digon stays at charge 2 < 46/21
        for r in reports:
            assert r.charge == 2
            assert r.threshold == TARGET_CHARGE
            assert r.deficit == Fraction(4, 21)
            assert any(m.pattern == "8K_2" for m in r.matches)


class TestCaseTable:
    def test_all_entries_hold_exactly(self):
        rep = case_table_verify()
        assert len(rep.entries) == 49
        assert rep.ok and bool(rep)
        assert rep.failures() == ()

    def test_spot_values(self):
        rep = case_table_verify()
        by_label = {e.label: e for e in rep.entries}
        t156 = by_label["3-face of a (1,5,6) triangle: 3 - 9*(2/21) + 9/105"]
        assert t156.lhs == Fraction(78, 35) and t156.ok
        quad24 = by_label["4-face, sigma = 24: 4 - 20*(2/21) + 4*(9/105)"]
        assert quad24.lhs == Fraction(256, 105) and quad24.ok
        assert quad24.lhs > TARGET_CHARGE

    def test_relations_are_evaluated_not_assumed(self):
        rep = case_table_verify()
        assert {e.relation for e in rep.entries} <= {"==", ">=", ">", "<", "<="}
        assert any(e.relation == "==" for e in rep.entries)
        assert any(e.relation == ">" for e in rep.entries)


class TestTriangleExclusion:
    def test_double_444_triangle_passes(self):
        emb = embed_cycle_multigraph((4, 4, 4))
        classes = classify_faces(emb.graph, emb)
        faces = [c.index for c in classes if c.kind == "triangle"]
        assert faces == [0, 5]
        rep = t444_exclusion_check(emb.graph, emb, faces[0])
        assert rep.ok
        assert rep.adjacent_triangles == (5,)
        assert rep.violations == ()

    def test_rejects_non_444_faces(self):
        emb = embed_cycle_multigraph((4, 4, 4))
        digon = next(
            c.index for c in classify_faces(emb.graph, emb) if c.kind == "2-face"
        )
        with pytest.raises(InvalidInput, match="not the inner face"):
            t444_exclusion_check(emb.graph, emb, digon)
        with pytest.raises(InvalidInput, match="out of range"):
            t444_exclusion_check(emb.graph, emb, 99)
