"""Rotation-system embeddings: faces, Euler counts, duality, edit operations."""

import random

import pytest

from orient9 import InvalidInput
from orient9.graph import Multigraph
from orient9.embedding import (
    PlaneEmbedding,
    add_chord,
    add_parallel_edge,
    dual,
    embed_cycle,
    embed_cycle_multigraph,
    embed_two_vertex,
    subdivide_edge,
)
from orient9.randgen import random_embedded


def _check_faces(emb: PlaneEmbedding) -> None:
    """Faces partition the directed ends and face_of_end agrees with them."""
    seen: list[int] = []
    for face in emb.faces:
        assert face.degree == len(face.ends)
        for end in face.ends:
            assert emb.face_of_end(end) == face.index
        seen.extend(face.ends)
    expected = sorted(2 * eid + s for eid in emb.graph.edge_ids() for s in (0, 1))
    assert sorted(seen) == expected


def euler_characteristic(emb: PlaneEmbedding) -> int:
    return emb.graph.n - emb.graph.num_edges() + emb.num_faces()


class TestConstruction:
    def test_cycle_has_two_faces_of_full_degree(self):
        for t in (3, 5, 9):
            emb = embed_cycle(t)
            assert emb.num_faces() == 2
            assert [f.degree for f in emb.faces] == [t, t]
            _check_faces(emb)

    def test_two_vertex_stack_is_all_digons(self):
        for alpha in (1, 2, 8):
            emb = embed_two_vertex(alpha)
            assert emb.num_faces() == alpha
            assert all(f.degree == 2 for f in emb.faces)
            _check_faces(emb)

    def test_cycle_multigraph_side_ids_and_faces(self):
        emb = embed_cycle_multigraph((2, 1, 1))
        G = emb.graph
        assert (G.n, G.num_edges()) == (3, 4)
        # first edge of side i keeps id i; the extra parallel gets id 3
        assert [(e.id, e.u, e.v) for e in G.edges] == [
            (0, 0, 1),
            (1, 1, 2),
            (2, 2, 0),
            (3, 0, 1),
        ]
        assert sorted(f.degree for f in emb.faces) == [2, 3, 3]
        _check_faces(emb)

    def test_rejects_malformed_rotations(self):
        G = Multigraph.from_pairs(3, [(0, 1), (1, 2), (2, 0)])
        with pytest.raises(InvalidInput):
            PlaneEmbedding(G, [[0, 1], [2, 5], [3, 4]])  # end 1 belongs at vertex 1
        with pytest.raises(InvalidInput):
            PlaneEmbedding(G, [[0], [1, 2], [3, 4]])  # end 5 missing entirely
        with pytest.raises(InvalidInput):
            PlaneEmbedding(G, [[0, 5, 5], [1, 2], [3, 4]])  # duplicate end

    def test_cycle_size_guards(self):
        with pytest.raises(InvalidInput):
            embed_cycle(2)
        with pytest.raises(InvalidInput):
            embed_two_vertex(0)
        with pytest.raises(InvalidInput):
            embed_cycle_multigraph((3, 0, 1))


class TestEulerFormula:
    def test_random_embeddings_are_spherical(self, rng: random.Random):
        for _ in range(100):
            emb = random_embedded(rng, steps=rng.randrange(3, 14))
            assert euler_characteristic(emb) == 2
            _check_faces(emb)


class TestDual:
    def test_square_dual_is_two_vertices_four_edges(self):
        d = dual(embed_cycle(4))
        assert (d.dual_graph.n, d.dual_graph.num_edges()) == (2, 4)
        # dual edge ids coincide with primal ids
        assert d.dual_graph.edge_ids() == embed_cycle(4).graph.edge_ids()
        _check_faces(d.dual_embedding)

    def test_edge_faces_matches_faces_of_edge(self, rng: random.Random):
        emb = random_embedded(rng, steps=8)
        d = dual(emb)
        for e in emb.graph.edges:
            assert d.edge_faces[e.id] == emb.faces_of_edge(e.id)
            de = d.dual_graph.edge(e.id)
            assert (de.u, de.v) == d.edge_faces[e.id]

    def test_bridge_is_rejected(self):
        path = Multigraph.from_pairs(3, [(0, 1), (1, 2)])
        emb = PlaneEmbedding(path, [[0], [1, 2], [3]])
        with pytest.raises(InvalidInput):
            dual(emb)

    def test_double_dual_reproduces_primal(self, rng: random.Random):
        for _ in range(40):
            emb = random_embedded(rng, steps=rng.randrange(3, 12))
            d = dual(emb)
            dd = dual(d.dual_embedding)
            # each dual face collects the ends of exactly one primal vertex
            vmap = {}
            for face in d.dual_embedding.faces:
                owners = {emb.end_vertex(t) for t in face.ends}
                assert len(owners) == 1
                vmap[face.index] = owners.pop()
            assert sorted(vmap.values()) == list(range(emb.graph.n))
            for e in dd.dual_graph.edges:
                primal = emb.graph.edge(e.id)
                assert {vmap[e.u], vmap[e.v]} == {primal.u, primal.v}


class TestEditOperations:
    def test_add_parallel_edge_creates_a_digon(self):
        emb = embed_cycle(5)
        nxt, nid = add_parallel_edge(emb, 2)
        assert nid == 5
        assert nxt.graph.num_edges() == 6
        assert nxt.num_faces() == 3
        digons = [f for f in nxt.faces if f.degree == 2]
        assert len(digons) == 1
        assert {end // 2 for end in digons[0].ends} == {2, nid}
        _check_faces(nxt)

    def test_add_chord_splits_the_face(self):
        emb = embed_cycle(6)
        face = emb.faces[0]
        nxt, nid = add_chord(emb, face.index, 0, 3)
        assert nxt.num_faces() == 3
        degrees = sorted(f.degree for f in nxt.faces)
        # the degree-6 face becomes 4 + 4; the untouched one stays 6
        assert degrees == [4, 4, 6]
        _check_faces(nxt)
        new_edge = nxt.graph.edge(nid)
        a = emb.end_vertex(face.ends[0])
        b = emb.end_vertex(face.ends[3])
        assert {new_edge.u, new_edge.v} == {a, b}

    def test_add_chord_rejects_degenerate_positions(self):
        emb = embed_cycle(4)
        with pytest.raises(InvalidInput):
            add_chord(emb, 0, 1, 1)

    def test_subdivide_edge_keeps_face_count(self):
        emb = embed_cycle(4)
        before = sorted(f.degree for f in emb.faces)
        nxt, w = subdivide_edge(emb, 0)
        assert w == 4
        assert nxt.graph.n == 5
        assert nxt.graph.num_edges() == 5
        assert nxt.num_faces() == emb.num_faces()
        # both faces along edge 0 gain one boundary step
        assert sorted(f.degree for f in nxt.faces) == [d + 1 for d in before]
        _check_faces(nxt)

    def test_edit_operations_preserve_planarity(self, rng: random.Random):
        emb = embed_cycle(4)
        for _ in range(60):
            op = rng.randrange(3)
            if op == 0:
                eid = rng.choice(emb.graph.edge_ids())
                emb, _ = add_parallel_edge(emb, eid)
            elif op == 1:
                face = emb.faces[rng.randrange(emb.num_faces())]
                if face.degree < 3:
                    continue
                i, j = rng.sample(range(face.degree), 2)
                if emb.end_vertex(face.ends[i]) == emb.end_vertex(face.ends[j]):
                    continue
                emb, _ = add_chord(emb, face.index, i, j)
            else:
                eid = rng.choice(emb.graph.edge_ids())
                emb, _ = subdivide_edge(emb, eid)
            assert euler_characteristic(emb) == 2
            _check_faces(emb)
