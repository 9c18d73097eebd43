"""Seeded random instance generators for tests and the verification suite.

Every generator takes a ``random.Random`` so runs are reproducible from a
seed.  Embedded instances are grown by planarity-preserving edit operations
(parallel copies, chords, subdivisions) starting from an embedded cycle, so
they come with a valid rotation system by construction.
"""

from __future__ import annotations

import random

from .embedding import (
    PlaneEmbedding,
    add_chord,
    add_parallel_edge,
    embed_cycle,
    subdivide_edge,
)
from .errors import InvalidInput
from .graph import Multigraph
from .partitions import Partition
from .signedgraphs import SignedGraph

__all__ = [
    "random_connected_multigraph",
    "random_multigraph",
    "random_partition",
    "random_embedded",
    "random_four_vertex",
    "random_heavy_cycle",
    "random_signed",
]


def random_connected_multigraph(
    rng: random.Random,
    n: int,
    extra_edges: int,
    max_mu: int | None = None,
) -> Multigraph:
    """A connected multigraph: a random spanning tree plus random parallels.

    ``extra_edges`` additional edges are drawn uniformly over vertex pairs,
    re-drawn while a pair would exceed ``max_mu``.
    """
    if n < 1:
        raise InvalidInput("need at least one vertex")
    pairs: list[tuple[int, int]] = []
    mu: dict[tuple[int, int], int] = {}

    def put(u: int, v: int) -> None:
        key = (min(u, v), max(u, v))
        pairs.append(key)
        mu[key] = mu.get(key, 0) + 1

    for v in range(1, n):
        put(rng.randrange(v), v)
    attempts = 0
    added = 0
    while added < extra_edges and attempts < 50 * (extra_edges + 1):
        attempts += 1
        if n < 2:
            break
        u, v = rng.sample(range(n), 2)
        key = (min(u, v), max(u, v))
        if max_mu is not None and mu.get(key, 0) >= max_mu:
            continue
        put(u, v)
        added += 1
    return Multigraph.from_pairs(n, pairs)


def random_multigraph(
    rng: random.Random,
    max_n: int,
    max_e: int,
    *,
    min_n: int = 2,
    max_mu: int | None = None,
) -> Multigraph:
    """A connected multigraph with ``min_n..max_n`` vertices and at most ``max_e`` edges."""
    n = rng.randint(min_n, max_n)
    base = n - 1  # spanning tree edges
    extra = rng.randint(0, max(0, max_e - base))
    return random_connected_multigraph(rng, n, extra, max_mu=max_mu)


def random_partition(rng: random.Random, n: int, min_blocks: int = 2) -> Partition:
    """A uniform-ish random partition of ``range(n)`` with at least ``min_blocks`` blocks."""
    if n < min_blocks:
        raise InvalidInput(f"cannot split {n} vertices into {min_blocks} blocks")
    while True:
        t = rng.randint(min_blocks, n)
        labels = [rng.randrange(t) for _ in range(n)]
        used = sorted(set(labels))
        if len(used) < min_blocks:
            continue
        return Partition.from_assignment(labels)


def random_embedded(
    rng: random.Random,
    *,
    start_cycle: int = 4,
    steps: int = 10,
    allow_subdivide: bool = True,
) -> PlaneEmbedding:
    """Grow a plane embedding from a cycle by random edit operations.

    Operations: duplicate a random edge (creates a 2-face), add a chord
    across a random face, subdivide a random edge.  Every intermediate
    embedding is validated by construction, and the result is bridgeless
    (each operation preserves 2-edge-connectivity of the embedded graph).
    """
    emb = embed_cycle(start_cycle)
    for _ in range(steps):
        op = rng.choice(("parallel", "parallel", "chord") if not allow_subdivide
                        else ("parallel", "parallel", "chord", "subdivide"))
        G = emb.graph
        if op == "parallel":
            eid = rng.choice(sorted(G.edge_ids()))
            emb, _ = add_parallel_edge(emb, eid)
        elif op == "subdivide":
            eid = rng.choice(sorted(G.edge_ids()))
            emb, _ = subdivide_edge(emb, eid)
        else:
            candidates = [i for i, f in enumerate(emb.faces) if f.degree >= 3]
            if not candidates:
                continue
            fi = rng.choice(candidates)
            d = emb.faces[fi].degree
            for _ in range(8):  # rejection sampling around loops
                a, b = rng.sample(range(d), 2)
                try:
                    emb, _ = add_chord(emb, fi, a, b)
                    break
                except InvalidInput:
                    continue
    return emb


def random_four_vertex(
    rng: random.Random,
    edges: int,
    min_deg: int,
    max_mu: int,
    tries: int = 10_000,
) -> Multigraph:
    """A 4-vertex multigraph with a prescribed edge count and degree floor.

    Samples multiplicity vectors over the six vertex pairs until the total,
    per-pair cap and minimum degree all hold (connectivity follows from the
    degree floor once it is positive).
    """
    pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    for _ in range(tries):
        cuts = sorted(rng.sample(range(edges + 5), 5))
        mults = [
            b - a - 1
            for a, b in zip([-1] + cuts, cuts + [edges + 5])
        ]  # composition of ``edges`` into 6 parts >= 0
        if any(m > max_mu for m in mults):
            continue
        mult_map = {p: m for p, m in zip(pairs, mults) if m > 0}
        G = Multigraph.from_multiplicities(4, mult_map)
        if min(G.degrees()) < min_deg or not G.is_connected():
            continue
        return G
    raise InvalidInput(
        f"no 4-vertex instance with e={edges}, delta>={min_deg}, mu<={max_mu} "
        f"found in {tries} draws"
    )


def random_heavy_cycle(
    rng: random.Random,
    *,
    length_range: tuple[int, int] = (2, 6),
    mult_range: tuple[int, int] = (6, 8),
) -> Multigraph:
    """A cycle multigraph with heavy parallel classes.

    With every class multiplicity >= 6, every edge cut contains at least two
    classes summing to >= 12, so any odd cut has size >= 13; these are the
    odd-11-edge-connected toys used to exercise the solver.
    """
    t = rng.randint(*length_range)
    if t == 2:
        mults = {(0, 1): rng.randint(11, 14)}
        return Multigraph.from_multiplicities(2, mults)
    pairs = {(i, (i + 1) % t): rng.randint(*mult_range) for i in range(t)}
    return Multigraph.from_multiplicities(t, pairs)


def random_signed(
    rng: random.Random,
    max_n: int = 3,
    max_e: int = 8,
) -> SignedGraph:
    """A small signed multigraph with at least one negative edge."""
    G = random_multigraph(rng, max_n, max_e)
    ids = sorted(G.edge_ids())
    signs = {eid: rng.choice((1, -1)) for eid in ids}
    if all(s == 1 for s in signs.values()):
        signs[rng.choice(ids)] = -1
    return SignedGraph(G, signs)
