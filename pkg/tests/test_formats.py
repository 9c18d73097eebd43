"""Model files: parse/serialize round trips and precise error positions."""

import json
import random

import pytest

from orient9 import InvalidInput
from orient9.embedding import embed_cycle, subdivide_edge
from orient9.formats import (
    dump_json,
    model_json,
    parse_boundary,
    parse_model,
    parse_rotation,
    serialize_model,
    to_dot,
)
from orient9.graph import Multigraph
from orient9.randgen import random_embedded, random_multigraph, random_signed


class TestRoundTrip:
    def test_unsigned_models_round_trip_exactly(self, rng: random.Random):
        for _ in range(400):
            G = random_multigraph(rng, 6, 14)
            m = parse_model(serialize_model(G))
            assert m.graph == G
            assert m.embedding is None and m.signed is None

    def test_signed_models_round_trip_exactly(self, rng: random.Random):
        for _ in range(300):
            sg = random_signed(rng, 4, 10)
            m = parse_model(serialize_model(sg.graph, signed=sg))
            assert m.graph == sg.graph
            assert m.signed is not None
            assert m.signed.signs == sg.signs

    def test_embedded_models_reach_a_serialization_fixed_point(self, rng: random.Random):
        for _ in range(300):
            emb = random_embedded(rng, steps=rng.randrange(2, 9))
            text = serialize_model(emb.graph, emb)
            m = parse_model(text)
            assert m.embedding is not None
            # edit operations can leave id gaps; the serializer renumbers
            # densely, so the parse is the same model up to that relabelling
            assert m.graph.n == emb.graph.n
            assert m.graph.num_edges() == emb.graph.num_edges()
            assert sorted(f.degree for f in m.embedding.faces) == sorted(
                f.degree for f in emb.faces
            )
            assert serialize_model(m.graph, m.embedding) == text

    def test_sparse_edge_ids_serialize_consistently(self):
        emb, _ = subdivide_edge(embed_cycle(4), 0)
        assert 0 not in emb.graph.edge_ids()
        m = parse_model(serialize_model(emb.graph, emb))
        assert m.graph.edge_ids() == (0, 1, 2, 3, 4)
        assert sorted(f.degree for f in m.embedding.faces) == [5, 5]

    def test_contiguous_embedded_round_trip_is_exact(self):
        emb = embed_cycle(6)
        m = parse_model(serialize_model(emb.graph, emb))
        assert m.graph == emb.graph
        assert m.embedding.rotation == emb.rotation

    def test_comments_and_blank_lines_are_ignored(self):
        m = parse_model("# header\n\ngraph 2 # two vertices\nedge 0 1 3 # stack\n")
        assert m.graph.num_edges() == 3


class TestParseErrors:
    @pytest.mark.parametrize(
        "text,fragment",
        [
            ("graph 2\nedge 0 0 3\n", "t.g:2:8: loop at vertex 0 not allowed"),
            ("graph 2\nedge 0 x 3\n", "t.g:2:8: expected an integer vertex, got 'x'"),
            ("edge 0 1 2\n", "t.g:1:1: 'edge' before 'graph <n>'"),
            ("graph 2\nedge 0 1 2\nedge 0 1 1 1\n", "t.g:3:1: cannot mix signed and unsigned"),
            ("graph 2\nbogus 1\n", "t.g:2:1: unknown directive 'bogus'"),
            ("graph 2\ngraph 2\n", "duplicate 'graph'"),
            ("graph 2\nedge 0 1 0\n", "multiplicity must be >= 1"),
            ("graph 2\nedge 0 2 1\n", "vertex 2 out of range 0..1"),
            ("graph 2\nedge 0 1 0 0\n", "not both zero"),
            ("graph 0\n", "vertex count must be >= 1"),
        ],
    )
    def test_positioned_messages(self, text: str, fragment: str):
        with pytest.raises(InvalidInput) as exc:
            parse_model(text, source="t.g")
        assert fragment in str(exc.value)

    def test_missing_graph_directive(self):
        with pytest.raises(InvalidInput, match="no 'graph <n>' directive"):
            parse_model("# only comments\n", source="t.g")

    def test_rotation_must_cover_every_vertex(self):
        text = "graph 2\nedge 0 1 1\nrot 0 0\n"
        with pytest.raises(InvalidInput, match=r"missing for vertices \[1\]"):
            parse_model(text, source="t.g")

    def test_duplicate_rotation_line(self):
        text = "graph 2\nedge 0 1 1\nrot 0 0\nrot 0 0\n"
        with pytest.raises(InvalidInput, match="duplicate rotation for vertex 0"):
            parse_model(text, source="t.g")

    def test_inconsistent_rotation_is_prefixed_with_the_source(self):
        text = "graph 2\nedge 0 1 2\nrot 0 0 1\nrot 1 2 3\n"
        with pytest.raises(InvalidInput, match="t.g: inconsistent rotation"):
            parse_model(text, source="t.g")


class TestStandaloneRotation:
    def test_parses_against_an_existing_graph(self):
        G = Multigraph.from_pairs(2, [(0, 1)] * 2)
        emb = parse_rotation("rot 0 0 2\nrot 1 3 1\n", G)
        assert emb.graph is G
        assert emb.num_faces() == 2

    def test_optional_header_must_match(self):
        G = Multigraph.from_pairs(2, [(0, 1)] * 2)
        with pytest.raises(InvalidInput, match="vertex count must be 2"):
            parse_rotation("graph 3\nrot 0 0 2\nrot 1 3 1\n", G)

    def test_edge_lines_are_rejected(self):
        G = Multigraph.from_pairs(2, [(0, 1)])
        with pytest.raises(InvalidInput, match="unknown directive 'edge'"):
            parse_rotation("edge 0 1 1\n", G)


class TestBoundaryFiles:
    def test_unset_vertices_default_to_zero(self):
        assert parse_boundary("0 4\n2 -4\n", 4) == [4, 0, -4, 0]

    def test_duplicates_and_range_are_rejected(self):
        with pytest.raises(InvalidInput, match="duplicate value for vertex 0"):
            parse_boundary("0 1\n0 2\n", 2)
        with pytest.raises(InvalidInput, match="out of range"):
            parse_boundary("5 1\n", 2)
        with pytest.raises(InvalidInput, match="usage"):
            parse_boundary("0 1 2\n", 2)


class TestExports:
    def test_dot_collapses_parallel_classes(self):
        G = Multigraph.from_multiplicities(3, {(0, 1): 8, (1, 2): 1})
        dot = to_dot(G)
        assert '0 -- 1 [label="x8"];' in dot
        assert "1 -- 2;" in dot

    def test_dot_signed_labels(self):
        G = Multigraph.from_pairs(2, [(0, 1)] * 3)
        from orient9.signedgraphs import SignedGraph

        sg = SignedGraph(G, {0: 1, 1: 1, 2: -1})
        assert '0 -- 1 [label="+2/-1"];' in to_dot(G, sg)

    def test_model_json_schema(self):
        emb = embed_cycle(3)
        doc = model_json(emb.graph, emb)
        assert doc["schema"] == 1
        assert doc["n"] == 3
        assert doc["edges"] == [[0, 1], [1, 2], [2, 0]]
        assert len(doc["rotation"]) == 3
        text = dump_json(doc)
        assert text.endswith("\n")
        assert json.loads(text) == doc

    def test_serialize_rejects_foreign_attachments(self):
        a, b = embed_cycle(3), embed_cycle(4)
        with pytest.raises(InvalidInput):
            serialize_model(a.graph, b)
