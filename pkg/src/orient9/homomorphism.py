"""Homomorphisms into odd cycles, and the tightness gadget.

The target is the cycle ``C_{2k+1}`` on vertices ``0..2k``; a homomorphism
sends every edge of ``G`` to an edge of the cycle, i.e. adjacent vertices to
values differing by exactly 1 mod ``2k+1``.

The solver is a bitmask CSP.  Domains are ``(2k+1)``-bit integers; the
constraint along every edge is the same ("differ by one on the cycle"), so
arc revision is two rotations and an OR.  Search pins one maximum-degree
vertex per component to 0 (the cycle is vertex-transitive), then branches on
the smallest remaining domain with arc-consistency propagation after every
assignment.  Exhaustion is a certified "none"; running past the node budget
is a separate outcome, never conflated with it.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._caps import DEFAULT_CAPS, Caps
from .errors import InvalidInput
from .graph import Multigraph
from .embedding import PlaneEmbedding

__all__ = ["HomResult", "find_homomorphism", "check_hom", "gadget"]


@dataclass(frozen=True)
class HomResult:
    """Outcome of a homomorphism search.

    ``status`` is ``"found"`` (with ``mapping``), ``"none"`` (search space
    exhausted), or ``"budget"`` (node budget hit before exhaustion).
    """

    status: str
    k: int
    mapping: tuple[int, ...] | None = None
    nodes: int = 0

    def __bool__(self) -> bool:
        return self.status == "found"


def check_hom(G: Multigraph, k: int, mapping: tuple[int, ...] | list[int]) -> bool:
    """Independent checker: every edge lands on an edge of C_{2k+1}."""
    p = 2 * k + 1
    if len(mapping) != G.n:
        return False
    if any(not 0 <= x < p for x in mapping):
        return False
    return all((mapping[e.u] - mapping[e.v]) % p in (1, p - 1) for e in G.edges)


def _neighbor_mask(dom: int, p: int, full: int) -> int:
    """Values adjacent on the cycle to some value in ``dom`` (p-bit rotate)."""
    left = ((dom << 1) | (dom >> (p - 1))) & full
    right = ((dom >> 1) | (dom << (p - 1))) & full
    return left | right


def find_homomorphism(G: Multigraph, k: int, caps: Caps = DEFAULT_CAPS) -> HomResult:
    """Search for a homomorphism ``G -> C_{2k+1}``; see the module notes."""
    if k < 1:
        raise InvalidInput("k must be at least 1")
    p = 2 * k + 1
    full = (1 << p) - 1
    n = G.n
    neighbors: list[list[int]] = [[] for _ in range(n)]
    for u in range(n):
        neighbors[u] = [w for w in G.neighbors(u)]

    domains = [full] * n
    for comp in G.components():
        root = max(comp, key=lambda v: (G.degree(v), -v))
        domains[root] = 1  # value 0

    nodes = 0

    def propagate(doms: list[int], seeds: list[int]) -> bool:
        """AC-3 from the seed vertices; False on a domain wipeout."""
        queue = list(seeds)
        queued = set(seeds)
        while queue:
            v = queue.pop()
            queued.discard(v)
            mask = _neighbor_mask(doms[v], p, full)
            for w in neighbors[v]:
                nd = doms[w] & mask
                if nd != doms[w]:
                    if nd == 0:
                        return False
                    doms[w] = nd
                    if w not in queued:
                        queue.append(w)
                        queued.add(w)
        return True

    if not propagate(domains, list(range(n))):
        return HomResult("none", k, None, nodes)

    budget = caps.hom_budget

    def search(doms: list[int]) -> tuple[str, list[int] | None]:
        nonlocal nodes
        # dynamic smallest-domain variable choice (ties: lowest id)
        best_v, best_size = -1, p + 1
        for v in range(n):
            c = doms[v].bit_count()
            if 1 < c < best_size:
                best_v, best_size = v, c
        if best_v < 0:
            return "found", [d.bit_length() - 1 for d in doms]
        rest = doms[best_v]
        while rest:
            bit = rest & -rest
            rest ^= bit
            nodes += 1
            if nodes > budget:
                return "budget", None
            child = list(doms)
            child[best_v] = bit
            if propagate(child, [best_v]):
                status, mapping = search(child)
                if status != "none":
                    return status, mapping
        return "none", None

    status, mapping = search(domains)
    if status == "found":
        out = tuple(mapping)
        if not check_hom(G, k, out):  # pragma: no cover - solver/checker guard
            raise AssertionError("solver produced a non-homomorphism")
        return HomResult("found", k, out, nodes)
    return HomResult(status, k, None, nodes)


# ======================================================================
# The tightness gadget
# ======================================================================


def gadget(k: int) -> tuple[Multigraph, PlaneEmbedding]:
    """The odd-girth-(4k-1) planar graph with no homomorphism to C_{2k+1}.

    A cycle ``C_{4k-1}`` (vertices ``0..4k-2``), an apex (vertex ``4k-1``),
    and ``4k-1`` vertex-disjoint apex-to-cycle paths, each of length
    ``2k-1``.  Any homomorphism would squeeze the outer cycle into the
    values at cycle-distance exactly ``2k-1`` from the apex image — a path
    in ``C_{2k+1}`` — and no odd cycle maps into a path.

    Returns the graph with its natural wheel-like plane embedding
    (``4k-1`` sector faces plus the outer cycle face).
    """
    if k < 1:
        raise InvalidInput("k must be at least 1")
    m = 4 * k - 1  # cycle length
    L = 2 * k - 1  # path length (edges)
    apex = m
    n = m + 1 + m * (L - 1)

    def internal(i: int, t: int) -> int:
        """t-th internal vertex of path i, 0-based from the apex side."""
        return m + 1 + i * (L - 1) + t

    edges: list[tuple[int, int, int]] = [(i, i, (i + 1) % m) for i in range(m)]
    for i in range(m):
        chain = [apex] + [internal(i, t) for t in range(L - 1)] + [i]
        for s in range(L):
            edges.append((m + i * L + s, chain[s], chain[s + 1]))
    G = Multigraph(n, edges)

    rot: list[list[int]] = [[] for _ in range(n)]
    for i in range(m):
        toward_next = 2 * i
        toward_prev = 2 * ((i - 1) % m) + 1
        path_last = m + i * L + (L - 1)  # edge arriving at cycle vertex i
        rot[i] = [toward_next, 2 * path_last + 1, toward_prev]
    rot[apex] = [2 * (m + i * L) for i in range(m)]
    for i in range(m):
        for t in range(L - 1):
            e_in = m + i * L + t  # ends at internal(i, t)
            e_out = e_in + 1  # leaves internal(i, t)
            rot[internal(i, t)] = [2 * e_in + 1, 2 * e_out]
    return G, PlaneEmbedding(G, rot)
