"""Plane embeddings as rotation systems over edge ends.

An edge with id ``e`` has two *ends*: ``2e`` at its stored endpoint ``u`` and
``2e + 1`` at its stored endpoint ``v``.  A :class:`PlaneEmbedding` assigns to
every vertex a cyclic sequence of the ends incident to it.  Faces are traced
with a fixed convention:

    from the directed edge with tail end ``t``, arrive at the head via end
    ``t ^ 1`` and depart along the successor of ``t ^ 1`` in the rotation at
    the head vertex.

A directed edge is identified with its tail end, so faces partition the set
of directed edge ends and ``sum(d(f)) == 2 e(G)``.  Construction validates
the rotation system, connectivity, and Euler's formula ``v - e + f == 2``
(the model is genus zero by contract, not by repair).

The dual construction assigns one dual vertex per face and keeps the primal
edge ids; the dual rotation at a face is the face's own orbit, which makes
the double dual reproduce the primal rotation system exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidInput
from .graph import Edge, LiftResult, Multigraph

__all__ = [
    "PlaneEmbedding",
    "Face",
    "DualResult",
    "dual",
    "lift_pair_embedded",
    "add_parallel_edge",
    "add_chord",
    "subdivide_edge",
    "embed_two_vertex",
    "embed_cycle",
    "embed_cycle_multigraph",
]


@dataclass(frozen=True)
class Face:
    """A face: the cyclic orbit of directed edge ends on its boundary."""

    index: int
    ends: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.ends)

    def __len__(self) -> int:
        return len(self.ends)


def _canonical_orbit(orbit: list[int]) -> tuple[int, ...]:
    """Rotate a cyclic sequence so it starts at its minimum element."""
    k = orbit.index(min(orbit))
    return tuple(orbit[k:] + orbit[:k])


class PlaneEmbedding:
    """A validated plane (genus-zero) embedding of a connected multigraph.

    Args:
        graph: the underlying :class:`Multigraph`.
        rotation: per vertex, the cyclic sequence of incident edge ends.

    Raises:
        InvalidInput: ends assigned to wrong vertices, missing/duplicated
            ends, a disconnected graph, or a rotation system of nonzero genus.
    """

    __slots__ = ("graph", "rotation", "_succ", "_faces", "_face_of_end", "__weakref__")

    def __init__(self, graph: Multigraph, rotation: Sequence[Sequence[int]]):
        if len(rotation) != graph.n:
            raise InvalidInput("rotation must list every vertex exactly once")
        rot = tuple(tuple(r) for r in rotation)
        seen: set[int] = set()
        for v, ends in enumerate(rot):
            for end in ends:
                eid, side = divmod(end, 2)
                edge = graph.edge(eid)
                owner = edge.u if side == 0 else edge.v
                if owner != v:
                    raise InvalidInput(
                        f"end {end} of edge {eid} belongs at vertex {owner}, found at {v}"
                    )
                if end in seen:
                    raise InvalidInput(f"end {end} appears twice in the rotation system")
                seen.add(end)
        if len(seen) != 2 * graph.num_edges():
            raise InvalidInput("every edge end must appear in exactly one rotation")
        if not graph.is_connected():
            raise InvalidInput("plane embeddings require a connected graph")
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "rotation", rot)
        succ: dict[int, int] = {}
        for ends in rot:
            for i, end in enumerate(ends):
                succ[end] = ends[(i + 1) % len(ends)]
        object.__setattr__(self, "_succ", succ)
        faces, face_of_end = self._trace_faces()
        object.__setattr__(self, "_faces", faces)
        object.__setattr__(self, "_face_of_end", face_of_end)
        f = len(faces)
        if graph.n - graph.num_edges() + f != 2:
            raise InvalidInput(
                f"rotation system has genus > 0: v - e + f = "
                f"{graph.n} - {graph.num_edges()} + {f} != 2"
            )

    def __setattr__(self, *args):  # pragma: no cover - defensive
        raise AttributeError("PlaneEmbedding is immutable")

    # ---------------- face tracing ----------------

    def _trace_faces(self) -> tuple[tuple[Face, ...], dict[int, int]]:
        remaining = {end for ends in self.rotation for end in ends}
        orbits: list[tuple[int, ...]] = []
        while remaining:
            start = min(remaining)
            orbit = []
            t = start
            while True:
                orbit.append(t)
                remaining.discard(t)
                t = self._succ[t ^ 1]
                if t == start:
                    break
            orbits.append(_canonical_orbit(orbit))
        orbits.sort()
        faces = tuple(Face(i, o) for i, o in enumerate(orbits))
        face_of_end = {end: f.index for f in faces for end in f.ends}
        return faces, face_of_end

    # ---------------- accessors ----------------

    @property
    def faces(self) -> tuple[Face, ...]:
        return self._faces

    def num_faces(self) -> int:
        return len(self._faces)

    def face_of_end(self, end: int) -> int:
        """Index of the face whose boundary contains the directed end."""
        return self._face_of_end[end]

    def end_vertex(self, end: int) -> int:
        eid, side = divmod(end, 2)
        e = self.graph.edge(eid)
        return e.u if side == 0 else e.v

    def face_tails(self, face: Face) -> tuple[int, ...]:
        """Boundary vertices in walk order (tail of each directed edge)."""
        return tuple(self.end_vertex(t) for t in face.ends)

    def face_pairs(self, face: Face) -> tuple[tuple[int, int], ...]:
        """Unordered endpoint pair of each boundary edge, in walk order."""
        return tuple(self.graph.edge(t // 2).pair for t in face.ends)

    def face_edge_ids(self, face: Face) -> tuple[int, ...]:
        return tuple(t // 2 for t in face.ends)

    def faces_of_edge(self, eid: int) -> tuple[int, int]:
        """(face left of u->v, face left of v->u); equal only for bridges."""
        return self._face_of_end[2 * eid], self._face_of_end[2 * eid + 1]

    def __repr__(self):
        return f"PlaneEmbedding(v={self.graph.n}, e={self.graph.num_edges()}, f={self.num_faces()})"


# ======================================================================
# Dual construction
# ======================================================================


@dataclass(frozen=True)
class DualResult:
    """Dual graph and embedding; dual edge ids equal primal edge ids."""

    dual_graph: Multigraph
    dual_embedding: PlaneEmbedding
    primal: PlaneEmbedding
    #: primal edge id -> (dual tail vertex, dual head vertex); tail is the
    #: face left of the stored u->v direction.
    edge_faces: dict[int, tuple[int, int]]


def dual(emb: PlaneEmbedding) -> DualResult:
    """Planar dual: one vertex per face, one edge per primal edge (same id).

    The dual edge of primal ``e = (u, v)`` runs from the face left of
    ``u -> v`` to the face left of ``v -> u``, and its ends reuse the ids
    ``2e`` / ``2e + 1``.  The dual rotation at a face is that face's orbit,
    under which the double dual reproduces the primal up to the canonical
    relabelling that sends each dual face to the primal vertex whose ends
    it collects.

    Raises:
        InvalidInput: if the graph has a bridge (its dual edge would be a
            loop, which the multigraph model excludes).
    """
    G = emb.graph
    edge_faces: dict[int, tuple[int, int]] = {}
    dual_edges = []
    for e in G.edges:
        fu, fv = emb.faces_of_edge(e.id)
        if fu == fv:
            raise InvalidInput(
                f"edge {e.id} is a bridge; its dual would be a loop, which the model excludes"
            )
        edge_faces[e.id] = (fu, fv)
        dual_edges.append((e.id, fu, fv))
    dual_graph = Multigraph(emb.num_faces(), dual_edges)
    # A face's orbit lists tail ends t; end t of primal edge e = t // 2 is,
    # in the dual, the end of the same edge id at this face.
    dual_rot = [face.ends for face in emb.faces]
    dual_emb = PlaneEmbedding(dual_graph, dual_rot)
    return DualResult(dual_graph, dual_emb, emb, edge_faces)


# ======================================================================
# Embedded graph editing
# ======================================================================


def _rot_insert(rot: list[list[int]], v: int, new_end: int, anchor: int, where: str) -> None:
    i = rot[v].index(anchor)
    if where == "after":
        rot[v].insert(i + 1, new_end)
    else:
        rot[v].insert(i, new_end)


def _mutable_rotation(emb: PlaneEmbedding) -> list[list[int]]:
    return [list(r) for r in emb.rotation]


def add_parallel_edge(emb: PlaneEmbedding, eid: int) -> tuple[PlaneEmbedding, int]:
    """Add a parallel copy alongside edge ``eid``, creating a 2-face with it.

    Returns the new embedding and the fresh edge id.
    """
    G = emb.graph
    e = G.edge(eid)
    new_graph, (nid,) = G.with_extra_edges([(e.u, e.v)])
    rot = _mutable_rotation(emb)
    _rot_insert(rot, e.u, 2 * nid, 2 * eid, "after")
    _rot_insert(rot, e.v, 2 * nid + 1, 2 * eid + 1, "before")
    return PlaneEmbedding(new_graph, rot), nid


def add_chord(emb: PlaneEmbedding, face_index: int, pos_a: int, pos_b: int) -> tuple[PlaneEmbedding, int]:
    """Split a face by a chord between the tails at two boundary positions.

    ``pos_a`` and ``pos_b`` index the face's orbit; the chord joins the tail
    vertices of those directed edges and is routed inside the face.

    Raises:
        InvalidInput: equal positions or equal tail vertices (loops excluded).
    """
    face = emb.faces[face_index]
    if pos_a == pos_b:
        raise InvalidInput("chord needs two distinct boundary positions")
    ta, tb = face.ends[pos_a % face.degree], face.ends[pos_b % face.degree]
    va, vb = emb.end_vertex(ta), emb.end_vertex(tb)
    if va == vb:
        raise InvalidInput("chord endpoints coincide; loops are not allowed")
    new_graph, (nid,) = emb.graph.with_extra_edges([(va, vb)])
    rot = _mutable_rotation(emb)
    _rot_insert(rot, va, 2 * nid, ta, "before")
    _rot_insert(rot, vb, 2 * nid + 1, tb, "before")
    return PlaneEmbedding(new_graph, rot), nid


def subdivide_edge(emb: PlaneEmbedding, eid: int) -> tuple[PlaneEmbedding, int]:
    """Replace edge ``eid`` by a length-2 path through a fresh vertex.

    Returns the new embedding and the new vertex id (== old ``n``).
    """
    G = emb.graph
    e = G.edge(eid)
    w = G.n
    nxt = max(G.edge_ids(), default=-1) + 1
    e1, e2 = nxt, nxt + 1  # (u, w) and (w, v)
    edges = [(x.id, x.u, x.v) for x in G.edges if x.id != eid]
    edges += [(e1, e.u, w), (e2, w, e.v)]
    new_graph = Multigraph(G.n + 1, edges)
    rot = _mutable_rotation(emb)
    rot[e.u][rot[e.u].index(2 * eid)] = 2 * e1
    rot[e.v][rot[e.v].index(2 * eid + 1)] = 2 * e2 + 1
    rot.append([2 * e1 + 1, 2 * e2])
    return PlaneEmbedding(new_graph, rot), w


def lift_pair_embedded(G: Multigraph, emb: PlaneEmbedding, v: int, x: int, y: int) -> LiftResult:
    """Embedded lifting: the two lifted ends must be consecutive at ``v``.

    Scans the rotation at ``v`` for a consecutive pair of ends whose edges
    reach ``x`` and ``y`` (in either order); deletes those two edges, adds a
    fresh ``xy`` edge routed along the freed corridor, and returns the
    updated embedding.

    Raises:
        InvalidInput: if no consecutive ``xv``/``vy`` ends exist at ``v``.
    """
    if emb.graph is not G and emb.graph != G:
        raise InvalidInput("embedding does not belong to this graph")
    ends = emb.rotation[v]
    choice = None
    for i, end in enumerate(ends):
        nxt = ends[(i + 1) % len(ends)]
        a = emb.graph.edge(end // 2).other(v)
        b = emb.graph.edge(nxt // 2).other(v)
        if (a, b) == (x, y) or (a, b) == (y, x):
            choice = (end, nxt) if a == x else (nxt, end)
            break
    if choice is None:
        raise InvalidInput(
            f"no consecutive {x}-{v} / {v}-{y} edge ends in the rotation at {v}"
        )
    if G.degree(v) == 2:
        raise InvalidInput(
            f"lifting both edges at degree-2 vertex {v} would isolate it; "
            "suppress the vertex instead"
        )
    end_x, end_y = choice  # end_x's edge reaches x, end_y's edge reaches y
    ex, ey = end_x // 2, end_y // 2
    new_graph, (nid,) = G.without_edges([ex, ey]).with_extra_edges([(x, y)])
    rot = _mutable_rotation(emb)
    rot[v] = [t for t in rot[v] if t not in (end_x, end_y)]
    # the far end of the deleted x-edge becomes the new end at x, in place
    far_x = (2 * ex) if emb.end_vertex(2 * ex) == x else (2 * ex + 1)
    far_y = (2 * ey) if emb.end_vertex(2 * ey) == y else (2 * ey + 1)
    rot[x][rot[x].index(far_x)] = 2 * nid
    rot[y][rot[y].index(far_y)] = 2 * nid + 1
    new_emb = PlaneEmbedding(new_graph, rot)
    return LiftResult(new_graph, nid, (ex, ey), new_emb)


# ======================================================================
# Embedding builders for standard shapes
# ======================================================================


def embed_two_vertex(alpha: int) -> PlaneEmbedding:
    """The 2-vertex multigraph with ``alpha`` parallel edges, drawn as nested arcs."""
    if alpha < 1:
        raise InvalidInput("need at least one edge")
    G = Multigraph.from_pairs(2, [(0, 1)] * alpha)
    rot0 = [2 * i for i in range(alpha)]
    rot1 = [2 * i + 1 for i in reversed(range(alpha))]
    return PlaneEmbedding(G, [rot0, rot1])


def embed_cycle(t: int) -> PlaneEmbedding:
    """Simple cycle on ``t >= 3`` vertices with edge ``i`` joining ``i, i+1 mod t``."""
    if t < 3:
        raise InvalidInput("cycle needs at least three vertices")
    G = Multigraph.from_pairs(t, [(i, (i + 1) % t) for i in range(t)])
    rot = []
    for i in range(t):
        toward_next = 2 * i
        toward_prev = 2 * ((i - 1) % t) + 1
        rot.append([toward_next, toward_prev])
    return PlaneEmbedding(G, rot)


def embed_cycle_multigraph(mults: Sequence[int]) -> PlaneEmbedding:
    """Cycle with per-side multiplicities (each ``>= 1``), parallels stacked.

    Side ``i`` joins vertices ``i`` and ``i+1 mod t``.  The first edge of
    side ``i`` has id ``i``; extra parallels get fresh ids in side order.
    """
    t = len(mults)
    if t < 3:
        raise InvalidInput("need at least three sides")
    if any(m < 1 for m in mults):
        raise InvalidInput("every side needs multiplicity at least 1")
    emb = embed_cycle(t)
    for i, m in enumerate(mults):
        for _ in range(m - 1):
            emb, _ = add_parallel_edge(emb, i)
    return emb
