"""Loopless multigraph model with stable edge identities.

The :class:`Multigraph` is the universe every other module acts on.  Vertices
are dense integers ``0..n-1``; edges are ``(edge_id, u, v)`` triples with
``u != v``.  Edge ids are unique and survive every operation that keeps the
edge (contraction keeps cross-block edges under their original ids, lifting
allocates a fresh id for the replacement edge), so certificates can always be
translated back to the caller's ids.

All instances are immutable after construction: operations return new values
and, where vertex ids are re-densified, a recorded ``old -> new`` mapping.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from ._caps import DEFAULT_CAPS, Caps
from .errors import InvalidInput

__all__ = [
    "Edge",
    "Multigraph",
    "ContractionResult",
    "LiftResult",
    "contract_subset",
    "contract_partition",
    "lift_pair",
    "edge_connectivity",
    "odd_edge_connectivity",
    "odd_girth",
    "double_graph",
]


@dataclass(frozen=True)
class Edge:
    """One parallel edge: an id plus an unordered endpoint pair (stored order matters
    only as a bookkeeping convention for orientations)."""

    id: int
    u: int
    v: int

    def other(self, w: int) -> int:
        if w == self.u:
            return self.v
        if w == self.v:
            return self.u
        raise InvalidInput(f"vertex {w} is not an endpoint of edge {self.id}")

    @property
    def pair(self) -> tuple[int, int]:
        return (self.u, self.v) if self.u < self.v else (self.v, self.u)


# ======================================================================
# Multigraph
# ======================================================================


class Multigraph:
    """Immutable loopless multigraph with stable edge ids.

    Args:
        n: number of vertices; ids are ``0..n-1``.
        edges: iterable of ``(edge_id, u, v)`` triples (or :class:`Edge`).

    Raises:
        InvalidInput: on loops, out-of-range endpoints, or duplicate edge ids.
    """

    __slots__ = ("n", "_edges", "_mu", "_deg", "_incident", "__weakref__")

    def __init__(self, n: int, edges: Iterable[tuple[int, int, int] | Edge] = ()):
        if n < 1:
            raise InvalidInput("a multigraph needs at least one vertex")
        parsed: dict[int, Edge] = {}
        for item in edges:
            e = item if isinstance(item, Edge) else Edge(*item)
            if not (0 <= e.u < n and 0 <= e.v < n):
                raise InvalidInput(f"edge {e.id} endpoint out of range 0..{n - 1}")
            if e.u == e.v:
                raise InvalidInput(f"edge {e.id} is a loop at vertex {e.u}; loops are not allowed")
            if e.id in parsed:
                raise InvalidInput(f"duplicate edge id {e.id}")
            parsed[e.id] = e
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_edges", dict(sorted(parsed.items())))
        mu: dict[tuple[int, int], int] = {}
        deg = [0] * n
        incident: list[list[int]] = [[] for _ in range(n)]
        for e in self._edges.values():
            mu[e.pair] = mu.get(e.pair, 0) + 1
            deg[e.u] += 1
            deg[e.v] += 1
            incident[e.u].append(e.id)
            incident[e.v].append(e.id)
        object.__setattr__(self, "_mu", mu)
        object.__setattr__(self, "_deg", deg)
        object.__setattr__(self, "_incident", [tuple(ids) for ids in incident])

    def __setattr__(self, *args):  # pragma: no cover - defensive
        raise AttributeError("Multigraph is immutable")

    # ---------------- constructors ----------------

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Multigraph":
        """Build from endpoint pairs, assigning edge ids ``0, 1, ...`` in order."""
        return cls(n, [(i, u, v) for i, (u, v) in enumerate(pairs)])

    @classmethod
    def from_multiplicities(cls, n: int, mult: Mapping[tuple[int, int], int]) -> "Multigraph":
        """Build from a ``(u, v) -> multiplicity`` table (pairs in any order)."""
        pairs: list[tuple[int, int]] = []
        for (u, v), m in sorted(((tuple(sorted(p)), m) for p, m in mult.items())):
            if m < 0:
                raise InvalidInput("multiplicities must be non-negative")
            pairs.extend([(u, v)] * m)
        return cls.from_pairs(n, pairs)

    # ---------------- basic accessors ----------------

    @property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(self._edges.values())

    def edge_ids(self) -> tuple[int, ...]:
        return tuple(self._edges.keys())

    def edge(self, eid: int) -> Edge:
        try:
            return self._edges[eid]
        except KeyError:
            raise InvalidInput(f"no edge with id {eid}") from None

    def num_edges(self) -> int:
        return len(self._edges)

    def vertices(self) -> range:
        return range(self.n)

    def mu(self, u: int, v: int) -> int:
        """Multiplicity of the pair ``{u, v}``."""
        if u == v:
            return 0
        return self._mu.get((u, v) if u < v else (v, u), 0)

    def degree(self, v: int) -> int:
        return self._deg[v]

    def degrees(self) -> tuple[int, ...]:
        return tuple(self._deg)

    def min_degree(self) -> int:
        return min(self._deg)

    def max_multiplicity(self) -> int:
        return max(self._mu.values(), default=0)

    def incident(self, v: int) -> tuple[int, ...]:
        """Ids of edges incident to ``v``, ascending."""
        return self._incident[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        seen = sorted({self.edge(eid).other(v) for eid in self._incident[v]})
        return tuple(seen)

    def pair_classes(self) -> dict[tuple[int, int], tuple[int, ...]]:
        """Parallel classes: ``(u, v) -> ascending edge ids`` for ``u < v``."""
        out: dict[tuple[int, int], list[int]] = {}
        for e in self._edges.values():
            out.setdefault(e.pair, []).append(e.id)
        return {p: tuple(ids) for p, ids in sorted(out.items())}

    def multiplicity_multiset(self) -> tuple[int, ...]:
        """Sorted positive multiplicities; an isomorphism invariant used by
        the family classifiers."""
        return tuple(sorted(self._mu.values()))

    # ---------------- connectivity / components ----------------

    def components(self) -> list[frozenset[int]]:
        seen = [False] * self.n
        comps = []
        for root in range(self.n):
            if seen[root]:
                continue
            stack, comp = [root], {root}
            seen[root] = True
            while stack:
                w = stack.pop()
                for eid in self._incident[w]:
                    nb = self.edge(eid).other(w)
                    if not seen[nb]:
                        seen[nb] = True
                        comp.add(nb)
                        stack.append(nb)
            comps.append(frozenset(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    # ---------------- cuts ----------------

    def cut_edges(self, X: Iterable[int]) -> tuple[int, ...]:
        """Ids of edges with exactly one endpoint in ``X``."""
        Xs = frozenset(X)
        return tuple(e.id for e in self._edges.values() if (e.u in Xs) != (e.v in Xs))

    def cut_size(self, X: Iterable[int]) -> int:
        Xs = frozenset(X)
        if not Xs or not Xs < frozenset(range(self.n)):
            raise InvalidInput("cut side must be a nonempty proper vertex subset")
        return sum(1 for e in self._edges.values() if (e.u in Xs) != (e.v in Xs))

    # ---------------- derived graphs ----------------

    def induced_subgraph(self, S: Iterable[int]) -> tuple["Multigraph", dict[int, int]]:
        """``G[S]`` with vertex ids re-densified.

        Returns:
            (subgraph, mapping old id -> new id).  Edge ids are preserved.
        """
        Ss = sorted(set(S))
        if not Ss:
            raise InvalidInput("induced subgraph needs a nonempty vertex set")
        if Ss[0] < 0 or Ss[-1] >= self.n:
            raise InvalidInput("vertex out of range")
        vmap = {old: new for new, old in enumerate(Ss)}
        kept = [
            (e.id, vmap[e.u], vmap[e.v])
            for e in self._edges.values()
            if e.u in vmap and e.v in vmap
        ]
        return Multigraph(len(Ss), kept), vmap

    def delete_vertex(self, v: int) -> tuple["Multigraph", dict[int, int]]:
        return self.induced_subgraph([w for w in range(self.n) if w != v])

    def without_edges(self, eids: Iterable[int]) -> "Multigraph":
        drop = set(eids)
        missing = drop - set(self._edges)
        if missing:
            raise InvalidInput(f"cannot delete absent edges {sorted(missing)}")
        return Multigraph(self.n, [e for e in self._edges.values() if e.id not in drop])

    def with_extra_edges(self, pairs: Sequence[tuple[int, int]]) -> tuple["Multigraph", list[int]]:
        """Add one fresh parallel edge per pair; fresh ids start past the max id."""
        nxt = max(self._edges, default=-1) + 1
        new_ids = list(range(nxt, nxt + len(pairs)))
        extra = [(nid, u, v) for nid, (u, v) in zip(new_ids, pairs)]
        return Multigraph(self.n, list(self._edges.values()) + extra), new_ids

    # ---------------- comparison ----------------

    def same_edge_multiset(self, other: "Multigraph") -> bool:
        """Equality of vertex count and endpoint-pair multisets (ids ignored)."""
        return self.n == other.n and self._mu == other._mu

    def __eq__(self, other):
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self.n == other.n and self._edges == other._edges

    def __hash__(self):
        return hash((self.n, tuple(self._edges.items())))

    def __repr__(self):
        return f"Multigraph(n={self.n}, e={self.num_edges()})"


# ======================================================================
# Contraction
# ======================================================================


@dataclass(frozen=True)
class ContractionResult:
    """A contracted graph plus the recorded ``old vertex -> new vertex`` map."""

    graph: Multigraph
    vertex_map: dict[int, int]


def contract_subset(G: Multigraph, S: Iterable[int]) -> ContractionResult:
    """Contract a connected vertex subset to a single vertex.

    All ``S``-internal edges disappear (they would become loops); every other
    edge keeps its id.  Vertex ids are re-densified in ascending order of
    representatives, the merged vertex standing at ``min(S)``'s slot.

    Raises:
        InvalidInput: if ``S`` is empty or ``G[S]`` is disconnected.
    """
    Ss = frozenset(S)
    if not Ss:
        raise InvalidInput("cannot contract an empty vertex set")
    sub, _ = G.induced_subgraph(Ss)
    if not sub.is_connected():
        raise InvalidInput(f"G[{sorted(Ss)}] is disconnected; contract_subset needs a connected subset")
    reps = sorted([min(Ss)] + [v for v in range(G.n) if v not in Ss])
    new_of_rep = {rep: i for i, rep in enumerate(reps)}
    vmap = {v: new_of_rep[min(Ss)] if v in Ss else new_of_rep[v] for v in range(G.n)}
    kept = []
    for e in G.edges:
        nu, nv = vmap[e.u], vmap[e.v]
        if nu != nv:
            kept.append((e.id, nu, nv))
    return ContractionResult(Multigraph(len(reps), kept), vmap)


def contract_partition(G: Multigraph, blocks: Sequence[Iterable[int]]) -> ContractionResult:
    """Contract every block of a partition simultaneously.

    Blocks need not induce connected subgraphs; identification is still
    well-defined.  The new vertex of block ``i`` is ``i`` (block order is
    preserved); loops are discarded; cross-block edges keep their ids.
    """
    frozen = [frozenset(b) for b in blocks]
    if any(not b for b in frozen):
        raise InvalidInput("partition blocks must be nonempty")
    union: set[int] = set()
    total = 0
    for b in frozen:
        union |= b
        total += len(b)
    if union != set(range(G.n)) or total != G.n:
        raise InvalidInput("blocks must partition the vertex set exactly")
    vmap = {}
    for i, b in enumerate(frozen):
        for v in b:
            vmap[v] = i
    kept = []
    for e in G.edges:
        nu, nv = vmap[e.u], vmap[e.v]
        if nu != nv:
            kept.append((e.id, nu, nv))
    return ContractionResult(Multigraph(len(frozen), kept), vmap)


# ======================================================================
# Lifting
# ======================================================================


@dataclass(frozen=True)
class LiftResult:
    """Result of lifting an edge pair off a middle vertex."""

    graph: Multigraph
    new_edge_id: int
    removed_edge_ids: tuple[int, int]
    embedding: object | None = None


def lift_pair(G: Multigraph, v: int, x: int, y: int, embedding=None) -> LiftResult:
    """Replace a path ``x - v - y`` by a direct edge ``xy``.

    Deletes one ``xv`` edge and one ``vy`` edge and adds a fresh ``xy`` edge,
    so ``d(v)`` drops by 2 and ``mu(x, y)`` rises by 1.  In abstract mode
    (``embedding is None``) the deleted edges are the lowest-id members of
    their parallel classes.  With an embedding, the two deleted edge ends
    must be consecutive in the rotation at ``v`` and the rotation system is
    updated consistently.

    Raises:
        InvalidInput: missing edges, non-distinct vertices, or (embedded
            mode) no consecutive pair of ``xv``/``vy`` ends at ``v``.
    """
    if len({v, x, y}) != 3:
        raise InvalidInput("lift_pair needs three distinct vertices")
    if G.mu(x, v) < 1 or G.mu(v, y) < 1:
        raise InvalidInput(f"lift_pair: need edges {x}-{v} and {v}-{y} present")
    if embedding is not None:
        from .embedding import lift_pair_embedded

        return lift_pair_embedded(G, embedding, v, x, y)
    e_xv = min(eid for eid in G.incident(v) if G.edge(eid).other(v) == x)
    e_vy = min(eid for eid in G.incident(v) if G.edge(eid).other(v) == y)
    new_graph, (new_id,) = G.without_edges([e_xv, e_vy]).with_extra_edges([(x, y)])
    return LiftResult(new_graph, new_id, (e_xv, e_vy))


# ======================================================================
# Connectivity measures
# ======================================================================


def _cut_sweep(G: Multigraph, odd_only: bool) -> tuple[int | float, frozenset[int] | None]:
    """Exhaustive cut scan over sides not containing vertex 0 (chunked numpy)."""
    us = np.fromiter((e.u for e in G.edges), dtype=np.int64, count=G.num_edges())
    vs = np.fromiter((e.v for e in G.edges), dtype=np.int64, count=G.num_edges())
    n = G.n
    best: int | float = math.inf
    best_mask = None
    total = 1 << (n - 1)
    chunk = 1 << 15
    for start in range(1, total, chunk):
        stop = min(start + chunk, total)
        masks = np.arange(start, stop, dtype=np.int64) << 1  # vertex 0 never in X
        ubits = (masks[:, None] >> us[None, :]) & 1
        vbits = (masks[:, None] >> vs[None, :]) & 1
        sizes = (ubits != vbits).sum(axis=1)
        if odd_only:
            ok = (sizes % 2).astype(bool)
            if not ok.any():
                continue
            idx = np.flatnonzero(ok)
            j = int(idx[np.argmin(sizes[idx])])
        else:
            j = int(np.argmin(sizes))
        cand, cand_mask = int(sizes[j]), int(masks[j])
        if cand < best:
            best, best_mask = cand, cand_mask
    if best_mask is None:
        return math.inf, None
    X = frozenset(v for v in range(n) if (best_mask >> v) & 1)
    return best, X


def edge_connectivity(G: Multigraph, caps: Caps = DEFAULT_CAPS) -> tuple[int, frozenset[int]]:
    """Minimum cut size with an attaining side.

    Uses an exhaustive scan up to the cut cap; beyond it, Stoer-Wagner on the
    weighted simple quotient (no witness-side determinism guarantees there).

    Returns:
        ``(lambda, X)``; ``(0, component)`` when ``G`` is disconnected.
    """
    comps = G.components()
    if len(comps) > 1:
        return 0, min(comps, key=sorted)
    if G.n == 1:
        raise InvalidInput("edge connectivity needs at least two vertices")
    if G.n <= caps.cut_vertices:
        value, X = _cut_sweep(G, odd_only=False)
        return int(value), X
    import networkx as nx

    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    for (u, v), m in G.pair_classes().items():
        H.add_edge(u, v, weight=len(m))
    value, (side_a, _) = nx.stoer_wagner(H)
    return int(value), frozenset(side_a)


def odd_edge_connectivity(
    G: Multigraph, caps: Caps = DEFAULT_CAPS
) -> tuple[int | float, frozenset[int] | None]:
    """Minimum size of an odd edge cut, or ``math.inf`` when every cut is even.

    Raises:
        CapExceeded: above the exhaustive-cut cap (there is no fast fallback
            for the odd variant).
    """
    comps = G.components()
    if len(comps) > 1:
        return 0, min(comps, key=sorted)
    if G.n == 1:
        raise InvalidInput("odd edge connectivity needs at least two vertices")
    caps.require(G.n, "cut_vertices")
    return _cut_sweep(G, odd_only=True)


# ======================================================================
# Odd girth
# ======================================================================


def _extract_odd_cycle(walk: list[int]) -> list[int]:
    """Reduce a closed odd walk (first == last) to a simple odd cycle inside it."""
    assert walk[0] == walk[-1] and (len(walk) - 1) % 2 == 1
    cyc = walk[:-1]
    while True:
        pos: dict[int, int] = {}
        dup = None
        for i, w in enumerate(cyc):
            if w in pos:
                dup = (pos[w], i)
                break
            pos[w] = i
        if dup is None:
            return cyc
        i, j = dup
        inner, outer = cyc[i:j], cyc[:i] + cyc[j:]
        cyc = inner if len(inner) % 2 == 1 else outer


def odd_girth(G: Multigraph) -> tuple[int | float, list[int] | None]:
    """Length of the shortest odd cycle, with a witness cycle (vertex list).

    Parallel edges never create odd cycles (a 2-cycle is even), so the scan
    runs on the underlying simple graph: BFS from every root; any non-tree
    edge joining same-parity levels closes an odd walk.

    Returns:
        ``(length, cycle)`` or ``(math.inf, None)`` for bipartite graphs.
    """
    adj = [G.neighbors(v) for v in range(G.n)]
    best: int | float = math.inf
    best_walk = None
    for root in range(G.n):
        depth = {root: 0}
        parent = {root: None}
        frontier = [root]
        while frontier:
            nxt = []
            for u in frontier:
                for w in adj[u]:
                    if w not in depth:
                        depth[w] = depth[u] + 1
                        parent[w] = u
                        nxt.append(w)
            frontier = nxt
        for u in depth:
            for w in adj[u]:
                if u < w and w in depth and (depth[u] + depth[w]) % 2 == 0:
                    length = depth[u] + depth[w] + 1
                    if length < best:
                        pu = []
                        a = u
                        while a is not None:
                            pu.append(a)
                            a = parent[a]
                        pw = []
                        a = w
                        while a is not None:
                            pw.append(a)
                            a = parent[a]
                        walk = pu[::-1] + pw  # root..u then w..root: closed, odd length
                        best = length
                        best_walk = _extract_odd_cycle(walk)
    if best_walk is None:
        return math.inf, None
    return best, best_walk


# ======================================================================
# Doubling
# ======================================================================


def double_graph(G: Multigraph) -> tuple[Multigraph, dict[int, tuple[int, int]]]:
    """The graph ``2G`` (every edge duplicated) plus the copy pairing.

    The pairing ``original id -> (copy1 id, copy2 id)`` is recorded here
    because downstream constructions depend on which two parallel edges of
    ``2G`` descend from the same original edge.
    """
    edges = []
    pairing = {}
    for i, e in enumerate(G.edges):
        e1, e2 = 2 * i, 2 * i + 1
        edges.append((e1, e.u, e.v))
        edges.append((e2, e.u, e.v))
        pairing[e.id] = (e1, e2)
    return Multigraph(G.n, edges), pairing
