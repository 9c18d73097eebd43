"""Independent brute-force reference implementations used by the tests.

Everything here is deliberately written from the definitions, not by calling
back into the package: set partitions are generated recursively, orientation
boundaries by trying all 2^e orientations, homomorphisms by exhausting vertex
maps, odd girth via the bipartite double cover, and cuts by subset sweep.
Slow on purpose; keep the instances small.
"""

from __future__ import annotations

import itertools
from collections import deque

from orient9 import Multigraph


# ----------------------------------------------------------------------
# Set partitions and the weight function
# ----------------------------------------------------------------------


def iter_set_partitions(items):
    """All partitions of ``items`` as lists of lists (recursive textbook way)."""
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in iter_set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]
        yield [[first]] + part


def partition_weight(G: Multigraph, blocks, cut_coeff: int = 23, offset: int = 42) -> int:
    which = {}
    for i, b in enumerate(blocks):
        for v in b:
            which[v] = i
    cross = sum(1 for e in G.edges if which[e.u] != which[e.v])
    return 2 * cross - cut_coeff * len(blocks) + offset


def brute_min_weight(G: Multigraph, cut_coeff: int = 23, offset: int = 42) -> int:
    best = None
    for blocks in iter_set_partitions(range(G.n)):
        if len(blocks) < 2:
            continue
        w = partition_weight(G, blocks, cut_coeff, offset)
        if best is None or w < best:
            best = w
    if best is None:
        raise ValueError("need at least two vertices")
    return best


# ----------------------------------------------------------------------
# Orientation boundaries
# ----------------------------------------------------------------------


def brute_achievable_boundaries(G: Multigraph, m: int) -> set[tuple[int, ...]]:
    """Net-degree vectors mod m over all 2^e orientations."""
    eids = list(G.edge_ids())
    out: set[tuple[int, ...]] = set()
    for mask in range(1 << len(eids)):
        net = [0] * G.n
        for pos, eid in enumerate(eids):
            e = G.edge(eid)
            if mask >> pos & 1:
                net[e.u] += 1
                net[e.v] -= 1
            else:
                net[e.u] -= 1
                net[e.v] += 1
        out.add(tuple(x % m for x in net))
    return out


def orientation_boundary(G: Multigraph, D, m: int) -> tuple[int, ...]:
    net = [0] * G.n
    for eid in G.edge_ids():
        e = G.edge(eid)
        if D.tails[eid]:
            net[e.u] += 1
            net[e.v] -= 1
        else:
            net[e.u] -= 1
            net[e.v] += 1
    return tuple(x % m for x in net)


# ----------------------------------------------------------------------
# Homomorphisms to odd cycles
# ----------------------------------------------------------------------


def is_cycle_hom(G: Multigraph, k: int, mapping) -> bool:
    n_cyc = 2 * k + 1
    return all(
        (mapping[e.u] - mapping[e.v]) % n_cyc in (1, n_cyc - 1) for e in G.edges
    )


def brute_find_hom(G: Multigraph, k: int):
    """First homomorphism to C_{2k+1} in lexicographic order, or None."""
    for mapping in itertools.product(range(2 * k + 1), repeat=G.n):
        if is_cycle_hom(G, k, mapping):
            return mapping
    return None


# ----------------------------------------------------------------------
# Odd girth via the bipartite double cover
# ----------------------------------------------------------------------


def brute_odd_girth(G: Multigraph) -> int | float:
    """min over v of dist((v,0),(v,1)) in the double cover; inf if bipartite."""
    adj: list[set[int]] = [set() for _ in range(G.n)]
    for e in G.edges:
        adj[e.u].add(e.v)
        adj[e.v].add(e.u)
    best: int | float = float("inf")
    for s in range(G.n):
        dist = {(s, 0): 0}
        q = deque([(s, 0)])
        while q:
            v, par = q.popleft()
            for w in adj[v]:
                nxt = (w, par ^ 1)
                if nxt not in dist:
                    dist[nxt] = dist[(v, par)] + 1
                    q.append(nxt)
        if (s, 1) in dist:
            best = min(best, dist[(s, 1)])
    return best


# ----------------------------------------------------------------------
# Cuts
# ----------------------------------------------------------------------


def brute_cut_size(G: Multigraph, side) -> int:
    S = set(side)
    return sum(1 for e in G.edges if (e.u in S) != (e.v in S))


def brute_odd_edge_connectivity(G: Multigraph) -> int | float:
    best: int | float = float("inf")
    for size in range(1, G.n):
        for side in itertools.combinations(range(G.n), size):
            c = brute_cut_size(G, side)
            if c % 2 == 1 and c < best:
                best = c
    return best


def brute_edge_connectivity(G: Multigraph) -> int:
    best = None
    for size in range(1, G.n // 2 + 1):
        for side in itertools.combinations(range(G.n), size):
            c = brute_cut_size(G, side)
            if best is None or c < best:
                best = c
    return best if best is not None else 0


# ----------------------------------------------------------------------
# Configuration matching
# ----------------------------------------------------------------------


def brute_config_matches(G: Multigraph, pattern) -> set[tuple[int, ...]]:
    """Canonical assignments of ``pattern`` in ``G`` by exhaustive injection."""
    thr = pattern.threshold_map()
    auts = pattern.automorphisms()
    found: set[tuple[int, ...]] = set()
    if pattern.n > G.n:
        return found
    for assign in itertools.permutations(range(G.n), pattern.n):
        if all(G.mu(assign[a], assign[b]) >= need for (a, b), need in thr.items()):
            found.add(min(tuple(assign[p[i]] for i in range(pattern.n)) for p in auts))
    return found


# ----------------------------------------------------------------------
# Flow axioms (unsigned), straight from the definition
# ----------------------------------------------------------------------


def check_unsigned_flow(G: Multigraph, flow) -> bool:
    """q <= |f(e)| <= p - q on every edge and zero boundary mod p."""
    if set(flow.values) != set(G.edge_ids()):
        return False
    for f in flow.values.values():
        if not (flow.q <= abs(f) <= flow.p - flow.q):
            return False
    net = [0] * G.n
    for eid, f in flow.values.items():
        e = G.edge(eid)
        if flow.orientation.tails[eid]:
            net[e.u] += f
            net[e.v] -= f
        else:
            net[e.v] += f
            net[e.u] -= f
    return all(x % flow.p == 0 for x in net)
