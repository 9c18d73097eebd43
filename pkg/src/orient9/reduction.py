"""Reduction machinery: gap-extraction, pair splitting, certificates, solver.

Four related tools live here.

* :func:`gap_lemma_extract` — given a partition whose weight sits below its
  type threshold, pull out the induced subgraph of the largest block and test
  it for N-goodness (the standard witness in that situation).
* :func:`zhang_split` — split a consecutive edge pair off a vertex while
  keeping the odd-edge-connectivity, finding the pair by exhaustive check.
* :func:`theorem_1_12_witness` — bounded search for a four-clause reduction
  certificate on a graph satisfying the reduction hypotheses (nonnegative
  weight, no quotient in N).
* :func:`solve_modular_9` — the recursive modular-orientation solver: split
  small even-degree vertices away, recurse across small cuts, extend through
  contractions, and verify every step.

The solver's constants are parameterized so the scaled-down oracle mode
(modulus 5, odd-edge-connectivity 11) exercises the same code paths as the
full modulus-9 / connectivity-23 configuration.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from ._caps import DEFAULT_CAPS, Caps
from .embedding import PlaneEmbedding
from .errors import CapExceeded, FalsificationEvent, InvalidInput
from .graph import Multigraph, contract_partition, contract_subset, lift_pair, odd_edge_connectivity, edge_connectivity
from .orientations import (
    Orientation,
    ZkBoundary,
    check_zk_orientation,
    extend_by_contraction,
    is_strongly_zk_connected,
    modular_orientation,
)
from .partitions import (
    DEFAULT_WEIGHTS,
    GoodnessReport,
    Partition,
    WeightConstants,
    classify_family,
    gap_threshold,
    is_N_good,
    is_S_good,
    min_weight,
    quotient_partitions,
    weight_of_partition,
)

__all__ = [
    "GapExtract",
    "gap_lemma_extract",
    "zhang_split",
    "ReductionCertificate",
    "theorem_1_12_witness",
    "SolveConstants",
    "DEFAULT_SOLVE",
    "SCALED_SOLVE",
    "solve_modular_9",
]


# ======================================================================
# Gap-threshold witness extraction
# ======================================================================


@dataclass(frozen=True)
class GapExtract:
    """Outcome of :func:`gap_lemma_extract`.

    ``applicable`` is true when the partition's weight sits strictly below
    its type threshold; only then are ``block``/``subgraph``/``report``
    filled in.  ``found`` means the induced subgraph of the largest block
    verified as N-good.
    """

    partition: Partition
    weight: int
    threshold: int | None
    applicable: bool
    block: frozenset[int] | None = None
    subgraph: Multigraph | None = None
    report: GoodnessReport | None = None
    note: str | None = None

    @property
    def found(self) -> bool:
        return self.applicable and self.report is not None and self.report.good


def gap_lemma_extract(
    G: Multigraph,
    P: Partition,
    weights: WeightConstants = DEFAULT_WEIGHTS,
    caps: Caps = DEFAULT_CAPS,
) -> GapExtract:
    """Test the standard below-threshold witness: is G[P_1] N-good?

    ``P`` must be nontrivial.  When its weight is at or above the threshold
    for its type — `(2+,1+,*) -> 9`, `(3+,1+,*) -> 16`, `(2+,2+,*) -> 18`,
    `(4+,1+,*) -> 20`, `(3+,2+,*) -> 25`, `(3+,3+,*) -> 32` — the extraction
    does not apply.  Below the threshold, the induced subgraph of the largest
    block is the candidate; no universal claim is made either way.
    """
    if P.n != G.n:
        raise InvalidInput("partition does not match the graph's vertex count")
    if P.is_trivial():
        raise InvalidInput("gap extraction needs a nontrivial partition")
    caps.require(G.n, "partition_vertices")
    theta = gap_threshold(P)
    w = weight_of_partition(G, P, weights)
    if theta is None or w >= theta:
        return GapExtract(P, w, theta, False, note="weight is not below the type threshold")
    top = max(len(b) for b in P.blocks)
    block = next(b for b in P.blocks if len(b) == top)
    H, _ = G.induced_subgraph(sorted(block))
    try:
        report = is_N_good(H, weights, caps)
    except InvalidInput as exc:
        return GapExtract(P, w, theta, True, block, H, None, f"goodness test rejected the block: {exc}")
    note = None if report.good else "largest block's induced subgraph is not N-good"
    return GapExtract(P, w, theta, True, block, H, report, note)


# ======================================================================
# Splitting a pair off a vertex
# ======================================================================


def _incident_in_order(G: Multigraph, v: int, embedding: PlaneEmbedding | None) -> list[int]:
    """Edge ids at ``v``: rotation order when embedded, id order otherwise."""
    if embedding is None:
        return sorted(G.incident(v))
    if embedding.graph != G:
        raise InvalidInput("embedding does not belong to this graph")
    return [end // 2 for end in embedding.rotation[v]]


def _split_once(G: Multigraph, e1: int, e2: int, v: int) -> tuple[Multigraph, int | None]:
    """Replace the path through ``v`` by a direct edge (or drop a digon)."""
    x = G.edge(e1).other(v)
    y = G.edge(e2).other(v)
    if x == y:
        return G.without_edges((e1, e2)), None
    base = G.without_edges((e1, e2))
    out, new_ids = base.with_extra_edges([(x, y)])
    return out, new_ids[0]


def zhang_split(
    G: Multigraph,
    v: int,
    embedding: PlaneEmbedding | None = None,
    caps: Caps = DEFAULT_CAPS,
) -> tuple[int, Multigraph]:
    """Split one consecutive edge pair off ``v`` without losing odd cuts.

    Edges at ``v`` are taken in rotation order (embedded) or ascending id
    order; position ``i`` pairs edge ``i`` with edge ``i+1`` cyclically.  The
    first position whose split keeps the odd-edge-connectivity is returned
    together with the split graph.  When the pair's far endpoints coincide,
    the split just deletes both edges.

    Requires odd-edge-connectivity at least 3 and ``d(v)`` outside
    ``{2, lambda_odd}``; below that the guarantee simply does not hold (at the
    centre of ``K_{1,3}``, with a single bridge as the minimum odd cut, every
    split disconnects the graph).  Exhausting all positions within the
    hypothesis contradicts the underlying splitting lemma and raises
    :class:`FalsificationEvent`.
    """
    lam, _ = odd_edge_connectivity(G, caps)
    if lam < 3:
        raise InvalidInput(
            f"splitting needs odd-edge-connectivity at least 3, got {lam}"
        )
    d = G.degree(v)
    if d < 3:
        raise InvalidInput(f"vertex {v} has degree {d}; splitting needs degree at least 3")
    if d == lam:
        raise InvalidInput(f"vertex {v} has degree equal to the odd-edge-connectivity {lam}")
    order = _incident_in_order(G, v, embedding)
    for i in range(d):
        e1, e2 = order[i], order[(i + 1) % d]
        split, _ = _split_once(G, e1, e2, v)
        if odd_edge_connectivity(split, caps)[0] >= lam:
            return i, split
    raise FalsificationEvent(
        f"no consecutive pair at vertex {v} (degree {d}) splits off while keeping "
        f"odd-edge-connectivity {lam}; the splitting lemma promises one. edges={order}"
    )


# ======================================================================
# Four-clause reduction certificates
# ======================================================================


@dataclass(frozen=True)
class ReductionCertificate:
    """A verified witness for one of the four reduction clauses.

    clause 1: ``subgraph_vertices`` induce an N-good proper subgraph.
    clause 2: after ``lifts`` (each ``(v, x, y)``), ``subgraph_vertices``
        induce an N-good subgraph whose contraction is S-good.
    clause 3: after ``lifts`` (all at ``vertex``), deleting ``vertex`` leaves
        an S-good graph and no quotient of the lifted graph lands in N.
    clause 4: the graph has at most four vertices.

    Reports attached to the certificate are the re-verified goodness tests;
    certificates are only built from passing reports.
    """

    clause: int
    description: str
    lifts: tuple[tuple[int, int, int], ...] = ()
    subgraph_vertices: tuple[int, ...] | None = None
    vertex: int | None = None
    subgraph_report: GoodnessReport | None = None
    quotient_report: GoodnessReport | None = None


def _every_quotient_outside_N(G: Multigraph) -> tuple[bool, str | Partition | None]:
    """Check ``G/P`` avoids N for every partition (identity quotient included)."""
    if classify_family(G).in_N:
        return False, "the graph itself"
    for Q in quotient_partitions(G.n):
        if classify_family(contract_partition(G, Q.blocks).graph).in_N:
            return False, Q
    return True, None


def _try_S_good(G: Multigraph, weights: WeightConstants, caps: Caps) -> GoodnessReport | None:
    """S-goodness, with precondition violations mapped to "no report"."""
    try:
        return is_S_good(G, weights, caps)
    except InvalidInput:
        return None


def _lift_at_vertex_guard(d: int, alpha: int) -> bool:
    """Arithmetic gate for lifting ``alpha`` pairs at a degree-``d`` vertex.

    These are the inequalities under which deleting the vertex afterwards is
    known to leave an S-good graph (given no heavy parallel class appears):
    d <= 14, d - alpha <= 11, d - 2*alpha >= 8.
    """
    return d <= 14 and d - alpha <= 11 and d - 2 * alpha >= 8


def _lift_candidates(
    G: Multigraph, embedding: PlaneEmbedding | None, at: int | None = None
) -> Iterator[tuple[int, int, int]]:
    """Possible single lifts ``(v, x, y)``, deterministic order.

    Abstract graphs allow any pair of distinct neighbors; embedded graphs
    only pairs whose edges sit consecutively in the rotation at ``v`` (those
    keep the graph plane).
    """
    vertices = range(G.n) if at is None else (at,)
    for v in vertices:
        if embedding is None:
            nbrs = sorted(set(G.neighbors(v)))
            for x, y in itertools.combinations(nbrs, 2):
                yield (v, x, y)
        else:
            seen: set[tuple[int, int]] = set()
            rot = embedding.rotation[v]
            d = len(rot)
            for j in range(d):
                e1, e2 = rot[j] // 2, rot[(j + 1) % d] // 2
                if e1 == e2:
                    continue
                x = G.edge(e1).other(v)
                y = G.edge(e2).other(v)
                if x == y:
                    continue
                key = (min(x, y), max(x, y))
                if key not in seen:
                    seen.add(key)
                    yield (v, key[0], key[1])


def _connected_vertex_sets(G: Multigraph, lo: int, hi: int) -> Iterator[tuple[int, ...]]:
    for size in range(lo, hi + 1):
        for S in itertools.combinations(range(G.n), size):
            H, _ = G.induced_subgraph(S)
            if H.is_connected():
                yield S


def _clause1(G: Multigraph, weights: WeightConstants, caps: Caps) -> ReductionCertificate | None:
    for S in _connected_vertex_sets(G, 2, G.n - 1):
        H, _ = G.induced_subgraph(S)
        report = is_N_good(H, weights, caps)
        if report.good:
            return ReductionCertificate(
                clause=1,
                description=f"induced subgraph on {S} is N-good (weight {report.weight})",
                subgraph_vertices=S,
                subgraph_report=report,
            )
    return None


def _clause2_check(
    G1: Multigraph,
    lifts: tuple[tuple[int, int, int], ...],
    weights: WeightConstants,
    caps: Caps,
) -> ReductionCertificate | None:
    for S in _connected_vertex_sets(G1, 2, G1.n):
        H, _ = G1.induced_subgraph(S)
        report = is_N_good(H, weights, caps)
        if not report.good:
            continue
        if len(S) == G1.n:
            return ReductionCertificate(
                clause=2,
                description=f"after lifts {lifts} the whole graph is N-good; "
                "its contraction is a single vertex",
                lifts=lifts,
                subgraph_vertices=S,
                subgraph_report=report,
            )
        quot = contract_subset(G1, S).graph
        qreport = _try_S_good(quot, weights, caps)
        if qreport is not None and qreport.good:
            return ReductionCertificate(
                clause=2,
                description=f"after lifts {lifts}, {S} induces an N-good subgraph "
                f"and contracting it leaves an S-good graph",
                lifts=lifts,
                subgraph_vertices=S,
                subgraph_report=report,
                quotient_report=qreport,
            )
    return None


class _Budget:
    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def spend(self) -> None:
        self.used += 1
        if self.used > self.limit:
            raise CapExceeded(
                f"lifting-sequence budget of {self.limit} exhausted; "
                "raise sequence_budget to search further"
            )


def _depth_limited_clause2(
    G: Multigraph,
    embedding: PlaneEmbedding | None,
    depth: int,
    weights: WeightConstants,
    caps: Caps,
    budget: _Budget,
) -> ReductionCertificate | None:
    def dfs(cur, emb, lifts, remaining):
        for v, x, y in _lift_candidates(cur, emb):
            budget.spend()
            try:
                res = lift_pair(cur, v, x, y, embedding=emb)
            except InvalidInput:
                continue
            seq = lifts + ((v, x, y),)
            if remaining == 1:
                cert = _clause2_check(res.graph, seq, weights, caps)
                if cert is not None:
                    return cert
            else:
                cert = dfs(res.graph, res.embedding, seq, remaining - 1)
                if cert is not None:
                    return cert
        return None

    return dfs(G, embedding, (), depth)


def _clause3(
    G: Multigraph,
    embedding: PlaneEmbedding | None,
    lift_bound: int,
    weights: WeightConstants,
    caps: Caps,
    budget: _Budget,
) -> ReductionCertificate | None:
    def check(G2, v, lifts):
        deleted, _ = G2.delete_vertex(v)
        if deleted.n < 2 or deleted.num_edges() == 0 or not deleted.is_connected():
            return None
        report = _try_S_good(deleted, weights, caps)
        if report is None or not report.good:
            return None
        ok, _ = _every_quotient_outside_N(G2)
        if not ok:
            return None
        return ReductionCertificate(
            clause=3,
            description=f"after lifting {lifts} at vertex {v}, deleting it leaves an "
            "S-good graph and the lifted graph has no quotient in N",
            lifts=lifts,
            vertex=v,
            quotient_report=report,
        )

    def dfs(cur, emb, v, lifts, remaining):
        for cand in _lift_candidates(cur, emb, at=v):
            budget.spend()
            try:
                res = lift_pair(cur, cand[0], cand[1], cand[2], embedding=emb)
            except InvalidInput:
                continue
            seq = lifts + (cand,)
            if remaining == 1:
                cert = check(res.graph, v, seq)
                if cert is not None:
                    return cert
            else:
                cert = dfs(res.graph, res.embedding, v, seq, remaining - 1)
                if cert is not None:
                    return cert
        return None

    for v in range(G.n):
        d = G.degree(v)
        alphas = [a for a in range(1, min(lift_bound, d // 2) + 1)]
        # the arithmetic guard identifies the sanctioned pair counts; try those first
        ordered = [a for a in alphas if _lift_at_vertex_guard(d, a)] + [
            a for a in alphas if not _lift_at_vertex_guard(d, a)
        ]
        for alpha in ordered:
            cert = dfs(G, embedding, v, (), alpha)
            if cert is not None:
                return cert
    return None


def theorem_1_12_witness(
    G: Multigraph,
    embedding: PlaneEmbedding | None = None,
    *,
    lift_bound: int = 3,
    vertex_cap: int = 8,
    sequence_budget: int = 20_000,
    weights: WeightConstants = DEFAULT_WEIGHTS,
    caps: Caps = DEFAULT_CAPS,
) -> ReductionCertificate | None:
    """Bounded search for a reduction certificate; ``None`` means exhausted.

    The input must satisfy the reduction hypotheses: at least two vertices,
    connected, nonnegative weight, and no quotient (the graph itself
    included) inside N.  Clauses are tried in the order 4, 1, 2, 3; within a
    clause the first verified witness in deterministic enumeration order is
    returned.  Lifting sequences are capped at ``lift_bound`` pairs and
    ``sequence_budget`` attempts, so an exhausted search (``None``) only says
    no certificate exists *within these bounds*.
    """
    if G.n < 2:
        raise InvalidInput("the reduction hypotheses exclude single-vertex graphs")
    if not G.is_connected():
        raise InvalidInput("reduction certificates are defined for connected graphs")
    if G.n > vertex_cap:
        raise CapExceeded(f"vertex cap for the certificate search is {vertex_cap}, got {G.n}")
    if embedding is not None and embedding.graph != G:
        raise InvalidInput("embedding does not belong to this graph")

    w, wit = min_weight(G, weights, caps)
    if w < 0:
        raise InvalidInput(f"hypothesis violated: weight {w} < 0 (witness partition {wit})")
    ok, offender = _every_quotient_outside_N(G)
    if not ok:
        raise InvalidInput(f"hypothesis violated: quotient by {offender} lands in N")

    if G.n <= 4:
        return ReductionCertificate(clause=4, description=f"graph has {G.n} <= 4 vertices")

    cert = _clause1(G, weights, caps)
    if cert is not None:
        return cert

    budget = _Budget(sequence_budget)
    for depth in range(1, lift_bound + 1):
        cert = _depth_limited_clause2(G, embedding, depth, weights, caps, budget)
        if cert is not None:
            return cert
    cert = _clause3(G, embedding, lift_bound, weights, caps, budget)
    if cert is not None:
        return cert
    return None


# ======================================================================
# The recursive modular solver
# ======================================================================


class SolveConstants(NamedTuple):
    """Modulus/connectivity pairing for the recursive solver."""

    k: int = 4
    lam: int = 23

    @property
    def modulus(self) -> int:
        return 2 * self.k + 1


DEFAULT_SOLVE = SolveConstants(4, 23)
SCALED_SOLVE = SolveConstants(2, 11)


def _minimal_small_cut(G: Multigraph, lam: int) -> frozenset[int]:
    """Smallest side (ties lexicographic) of a cut below ``lam``."""
    for size in range(2, G.n - 1):
        for X in itertools.combinations(range(G.n), size):
            if G.cut_size(X) < lam:
                return frozenset(X)
    raise FalsificationEvent(
        f"edge connectivity below {lam} but no proper cut with both sides of "
        "size >= 2 was found; a small-degree vertex survived the split phase"
    )


def _solve(
    G: Multigraph,
    embedding: PlaneEmbedding | None,
    m: int,
    lam: int,
    caps: Caps,
) -> Orientation:
    lam_here, _ = odd_edge_connectivity(G, caps)
    if lam_here < lam:
        raise FalsificationEvent(
            f"odd-edge-connectivity dropped to {lam_here} < {lam} during the reduction"
        )

    # Phase 1: split every even-degree vertex of degree < lam down to nothing.
    records: list[tuple] = []
    work = G
    while True:
        v = next(
            (u for u in range(work.n) if work.degree(u) % 2 == 0 and work.degree(u) < lam),
            None,
        )
        if v is None:
            break
        d = work.degree(v)
        if d == 0:
            if work.n == 1:
                break  # nothing left to orient
            work, _ = work.delete_vertex(v)  # edge ids survive; nothing to record
            continue
        emb_arg = embedding if embedding is not None and embedding.graph == work else None
        if d == 2:
            order = _incident_in_order(work, v, emb_arg)
            e1, e2 = order[0], order[1]
            nxt, nid = _split_once(work, e1, e2, v)
            # Suppression always isolates v; check cuts without the lone
            # vertex so it is not mistaken for a disconnection.
            rest, _ = nxt.delete_vertex(v) if nxt.n > 1 else (nxt, None)
            if rest.n >= 2 and odd_edge_connectivity(rest, caps)[0] < lam:
                raise FalsificationEvent(
                    f"suppressing degree-2 vertex {v} lowered the odd-edge-connectivity"
                )
            i = 0
        else:
            i, nxt = zhang_split(work, v, emb_arg, caps)
            order = _incident_in_order(work, v, emb_arg)
            e1, e2 = order[i], order[(i + 1) % d]
            new_ids = set(nxt.edge_ids()) - set(work.edge_ids())
            nid = new_ids.pop() if new_ids else None
        x = work.edge(e1).other(v)
        y = work.edge(e2).other(v)
        if nid is None:
            # digon through v dropped: route it x -> v -> x
            records.append(("digon", e1, work.edge(e1).u == x, e2, work.edge(e2).u == v))
        else:
            records.append(
                (
                    "lift",
                    nid,
                    e1,
                    work.edge(e1).u == x,  # tail flag when the new edge runs x -> y
                    work.edge(e1).u == v,  # ... and when it runs y -> x
                    e2,
                    work.edge(e2).u == v,
                    work.edge(e2).u == y,
                )
            )
        work = nxt

    # Phase 2/3 on what remains.
    tails: dict[int, bool] = {}
    if work.num_edges() > 0:
        if not work.is_connected():
            for comp in work.components():
                sub, _ = work.induced_subgraph(sorted(comp))
                if sub.num_edges():
                    tails.update(_solve(sub, None, m, lam, caps).tails)
        else:
            conn, _ = edge_connectivity(work, caps)
            if conn >= lam:
                direct = modular_orientation(work, m, caps)
                if direct is None:
                    raise FalsificationEvent(
                        f"a {lam}-edge-connected graph admitted no modular {m}-orientation"
                    )
                tails.update(direct.tails)
            else:
                X = _minimal_small_cut(work, lam)
                H, _ = work.induced_subgraph(sorted(X))
                if not H.is_connected():
                    raise FalsificationEvent(
                        f"minimal cut side {sorted(X)} induces a disconnected graph; "
                        "minimality should force connectivity"
                    )
                sz = is_strongly_zk_connected(H, m, caps)
                if not sz:
                    raise FalsificationEvent(
                        f"cut side {sorted(X)} (cut {work.cut_size(X)} < {lam}) is not "
                        f"strongly Z_{m}-connected; its weight bound says it must be"
                    )
                quot = contract_subset(work, X).graph
                D_quot = _solve(quot, None, m, lam, caps)
                full = extend_by_contraction(work, X, D_quot, ZkBoundary.zero(m, work.n), caps)
                tails.update(full.tails)

    # Unwind the split records: transfer each lifted direction to its pair.
    for rec in reversed(records):
        if rec[0] == "digon":
            _, e1, t1, e2, t2 = rec
            tails[e1] = t1
            tails[e2] = t2
        else:
            _, nid, e1, t1_fwd, t1_bwd, e2, t2_fwd, t2_bwd = rec
            fwd = tails.pop(nid)
            tails[e1] = t1_fwd if fwd else t1_bwd
            tails[e2] = t2_fwd if fwd else t2_bwd
    return Orientation(tails)


def solve_modular_9(
    G: Multigraph,
    embedding: PlaneEmbedding | None = None,
    *,
    constants: SolveConstants = DEFAULT_SOLVE,
    caps: Caps = DEFAULT_CAPS,
) -> Orientation:
    """Modular orientation via the split / direct-solve / cut recursion.

    Requires odd-edge-connectivity at least ``constants.lam``.  The recursion
    (a) splits even-degree vertices of degree below ``lam`` away, (b) solves
    ``lam``-edge-connected graphs directly by dynamic program, and (c)
    otherwise contracts the minimal side of a sub-``lam`` cut, recurses, and
    extends back.  Each step is verified as it happens; a verification
    failure raises :class:`FalsificationEvent` naming the failing step, and
    the final orientation is re-checked against the zero boundary mod
    ``2k+1`` before being returned.
    """
    if G.n < 1:
        raise InvalidInput("empty graph")
    if not G.is_connected():
        raise InvalidInput("the solver expects a connected graph")
    if embedding is not None and embedding.graph != G:
        raise InvalidInput("embedding does not belong to this graph")
    m = constants.modulus
    lam_odd, _ = odd_edge_connectivity(G, caps)
    if lam_odd < constants.lam:
        raise InvalidInput(
            f"odd-edge-connectivity {lam_odd} is below the required {constants.lam}"
        )
    D = _solve(G, embedding, m, constants.lam, caps)
    if not D.covers(G) or not check_zk_orientation(G, D, m, ZkBoundary.zero(m, G.n)):
        raise FalsificationEvent(
            "assembled orientation failed the final modular re-verification"
        )
    return D
