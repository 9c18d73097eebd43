"""Signed circular flows: the doubled-graph pipeline and its checkers."""

import dataclasses
import random

import pytest

from orient9 import CapExceeded, DEFAULT_CAPS, InvalidInput
from orient9.graph import Multigraph, double_graph
from orient9.orientations import Orientation
from orient9.randgen import random_signed
from orient9.signedgraphs import (
    SignedCircularFlow,
    SignedGraph,
    boundary_from_signature,
    build_signed_flow,
    find_tight_cut,
    signed_flow_pipeline,
    verify_signed_flow,
)


def k2(alpha: int) -> Multigraph:
    return Multigraph.from_multiplicities(2, {(0, 1): alpha})


class TestSignedGraph:
    def test_signature_must_cover_edges_exactly(self):
        G = k2(2)
        with pytest.raises(InvalidInput):
            SignedGraph(G, {0: 1})
        with pytest.raises(InvalidInput):
            SignedGraph(G, {0: 1, 1: 0})
        sg = SignedGraph(G, {0: 1, 1: -1})
        assert sg.p_plus(0) == 1 and sg.p_plus(1) == 1
        assert sg.positive_edges() == [0]
        assert sg.negative_edges() == [1]
        assert SignedGraph.all_positive(G).negative_edges() == []

    def test_flow_container_requires_even_p(self):
        with pytest.raises(InvalidInput):
            SignedCircularFlow(9, 4, Orientation({}), {})


class TestDoubledGraph:
    def test_doubling_doubles_degrees_and_pairs_copies(self, rng: random.Random):
        sg = random_signed(rng)
        G = sg.graph
        doubled, pairing = double_graph(G)
        assert doubled.n == G.n
        assert doubled.num_edges() == 2 * G.num_edges()
        for v in range(G.n):
            assert doubled.degree(v) == 2 * G.degree(v)
        for eid, (c1, c2) in pairing.items():
            e = G.edge(eid)
            for c in (c1, c2):
                d = doubled.edge(c)
                assert {d.u, d.v} == {e.u, e.v}

    def test_signature_boundary_lands_on_0_or_2k(self, rng: random.Random):
        for _ in range(10):
            sg = random_signed(rng)
            beta = boundary_from_signature(sg, 8)
            assert beta.m == 32
            for v, r in enumerate(beta.residues()):
                assert r == (16 if sg.p_plus(v) % 2 else 0)
        with pytest.raises(InvalidInput):
            boundary_from_signature(sg, 0)


class TestPipeline:
    def test_small_instances_get_strict_32_14_flows(self, rng: random.Random):
        built = 0
        while built < 12:
            sg = random_signed(rng, 3, 8)
            cert = signed_flow_pipeline(sg, 8)
            if cert is None:
                continue
            built += 1
            assert cert.k == 8
            assert (cert.flow.p, cert.flow.q) == (32, 14)
            ok, problems = verify_signed_flow(sg, cert.flow)
            assert ok, problems
            assert cert.strict and cert.tight_cut is None
            assert cert.doubled_orientation.is_strongly_connected(double_graph(sg.graph)[0])
            for eid, val in cert.flow.values.items():
                if sg.signs[eid] == 1:
                    assert val in (14, 16, 18)
                else:
                    assert val in (-2, 0, 2)

    def test_single_positive_edge_has_no_orientation_start(self):
        sg = SignedGraph.all_positive(Multigraph.from_pairs(2, [(0, 1)]))
        assert signed_flow_pipeline(sg, 8) is None

    def test_build_rejects_foreign_pairing(self):
        sg = SignedGraph(k2(2), {0: 1, 1: -1})
        doubled, pairing = double_graph(sg.graph)
        swapped = {0: pairing[1], 1: pairing[0]}
        any_orientation = Orientation({eid: True for eid in doubled.edge_ids()})
        with pytest.raises(InvalidInput, match="pairing"):
            build_signed_flow(sg, 2, any_orientation, swapped)

    def test_build_rejects_wrong_boundary_orientation(self):
        sg = SignedGraph(k2(3), {0: 1, 1: -1, 2: 1})
        doubled, pairing = double_graph(sg.graph)
        all_forward = Orientation({eid: True for eid in doubled.edge_ids()})
        with pytest.raises(InvalidInput):
            build_signed_flow(sg, 8, all_forward, pairing, doubled=doubled)


class TestVerification:
    def _cert(self, rng: random.Random):
        while True:
            sg = random_signed(rng, 3, 8)
            cert = signed_flow_pipeline(sg, 8)
            if cert is not None:
                return sg, cert

    def test_corrupted_value_is_reported(self, rng: random.Random):
        sg, cert = self._cert(rng)
        eid = sg.positive_edges()[0]
        bad = SignedCircularFlow(32, 14, cert.flow.orientation, {**cert.flow.values, eid: 5})
        ok, problems = verify_signed_flow(sg, bad)
        assert not ok
        assert any(f"edge {eid}" in p or "boundary" in p for p in problems)

    def test_missing_edge_is_reported(self, rng: random.Random):
        sg, cert = self._cert(rng)
        values = dict(cert.flow.values)
        values.pop(sorted(values)[0])
        bad = SignedCircularFlow(32, 14, cert.flow.orientation, values)
        ok, problems = verify_signed_flow(sg, bad)
        assert not ok and "exactly once" in problems[0]

    def test_tight_cut_detection(self):
        # four positive parallel edges, all oriented the same way, value q:
        # every edge leaves X = {0} at exactly q, the tight pattern
        sg = SignedGraph.all_positive(k2(4))
        flow = SignedCircularFlow(8, 2, Orientation({e: True for e in range(4)}),
                                  {e: 2 for e in range(4)})
        ok, problems = verify_signed_flow(sg, flow)
        assert ok, problems
        assert find_tight_cut(sg, flow) == frozenset({0})

    def test_tight_cut_guards(self, rng: random.Random):
        sg, cert = self._cert(rng)
        with pytest.raises(InvalidInput):
            find_tight_cut(sg, cert.flow, r=3)
        bad = SignedCircularFlow(32, 14, cert.flow.orientation,
                                 {eid: 0 for eid in cert.flow.values})
        with pytest.raises(InvalidInput):
            find_tight_cut(sg, bad)
        small_caps = dataclasses.replace(DEFAULT_CAPS, cut_vertices=1)
        with pytest.raises(CapExceeded):
            find_tight_cut(sg, cert.flow, caps=small_caps)
