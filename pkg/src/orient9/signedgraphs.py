"""Signed graphs, circular flows on them, and the strong-connectivity route
to flows finer than 2k/(k-1).

A signed graph assigns each edge a sign.  For an even parameter ``p``, a
circular p/q-flow is an orientation plus integer values with

    (i)   positive edges:  |f(e)| in {q, ..., p-q},
    (ii)  negative edges:  |f(e)| in {0, ..., p/2-q} u {p/2+q, ..., p-1},
    (iii) ordinary conservation: sum out - sum in == 0 (mod p) everywhere.

The constructive pipeline takes ``k``, doubles the graph, asks the
orientation engine for a strongly connected orientation of ``2G`` whose
boundary is ``2k`` exactly at the vertices meeting an odd number of positive
edges, and folds the two copies of each edge into a single value:

    f(e) = f_1(e) + f_2(e),   f_1 in {-2, 0, 2} (copy-direction indicator sum
    against a fixed reference orientation), f_2 = 2k on positive edges only.

The result is a (4k, 2k-2)-flow whose values are so rigid that a "tight"
cut would force every doubled edge across it into one direction —
impossible for a strongly connected orientation.  The absence of a tight cut
is exactly the strictness certificate for the flow value 2k/(k-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from ._caps import DEFAULT_CAPS, Caps
from .errors import CapExceeded, FalsificationEvent, InvalidInput
from .graph import Multigraph, double_graph
from .orientations import Orientation, PcBoundary, check_zk_orientation, find_sc_orientation, ZkBoundary

__all__ = [
    "SignedGraph",
    "SignedCircularFlow",
    "verify_signed_flow",
    "find_tight_cut",
    "boundary_from_signature",
    "build_signed_flow",
    "signed_flow_pipeline",
    "SignedFlowCertificate",
]


@dataclass(frozen=True)
class SignedGraph:
    """A multigraph with a sign (+1 or -1) on every edge."""

    graph: Multigraph
    signs: dict[int, int]

    def __post_init__(self):
        if set(self.signs) != set(self.graph.edge_ids()):
            raise InvalidInput("signature must assign every edge exactly once")
        if any(s not in (1, -1) for s in self.signs.values()):
            raise InvalidInput("signs must be +1 or -1")

    @classmethod
    def all_positive(cls, G: Multigraph) -> "SignedGraph":
        return cls(G, {eid: 1 for eid in G.edge_ids()})

    def p_plus(self, v: int) -> int:
        """Number of positive edges at ``v``."""
        return sum(1 for eid in self.graph.incident(v) if self.signs[eid] == 1)

    def positive_edges(self) -> list[int]:
        return [eid for eid in sorted(self.signs) if self.signs[eid] == 1]

    def negative_edges(self) -> list[int]:
        return [eid for eid in sorted(self.signs) if self.signs[eid] == -1]


@dataclass(frozen=True)
class SignedCircularFlow:
    """Candidate circular p/q-flow on a signed graph (p even)."""

    p: int
    q: int
    orientation: Orientation
    values: dict[int, int]

    def __post_init__(self):
        if self.p % 2:
            raise InvalidInput("signed circular flows use an even p")


def verify_signed_flow(sg: SignedGraph, flow: SignedCircularFlow) -> tuple[bool, list[str]]:
    """Check all three defining clauses; violations are reported, not thrown."""
    G = sg.graph
    problems: list[str] = []
    if set(flow.values) != set(G.edge_ids()) or not flow.orientation.covers(G):
        return False, ["flow does not assign every edge exactly once"]
    p, q = flow.p, flow.q
    half = p // 2
    lo = set(range(0, half - q + 1)) | set(range(half + q, p))
    for eid in sorted(flow.values):
        a = abs(flow.values[eid])
        if sg.signs[eid] == 1:
            if not q <= a <= p - q:
                problems.append(f"positive edge {eid}: |{flow.values[eid]}| outside [{q}, {p - q}]")
        else:
            if a not in lo:
                problems.append(
                    f"negative edge {eid}: |{flow.values[eid]}| outside "
                    f"[0, {half - q}] u [{half + q}, {p - 1}]"
                )
    net = [0] * G.n
    for t, h, eid in flow.orientation.arcs(G):
        net[t] = (net[t] + flow.values[eid]) % p
        net[h] = (net[h] - flow.values[eid]) % p
    for v, b in enumerate(net):
        if b % p:
            problems.append(f"vertex {v}: boundary {b} != 0 (mod {p})")
    return not problems, problems


def find_tight_cut(
    sg: SignedGraph,
    flow: SignedCircularFlow,
    r: Fraction | None = None,
    caps: Caps = DEFAULT_CAPS,
) -> frozenset[int] | None:
    """First vertex set X whose cut realizes the tight value pattern, or None.

    The pattern, with values read mod p and edges taken relative to X:

        sign +, leaving X:  f == q        sign +, entering X:  f == p - q
        sign -, leaving X:  f == p/2 + q  sign -, entering X:  f == p/2 - q

    The pattern is direction-asymmetric, so all proper nonempty X (not just
    those avoiding a fixed vertex) are scanned, in ascending bitmask order.

    Raises:
        InvalidInput: the input fails :func:`verify_signed_flow`, or ``r``
            disagrees with the flow's p/q.
        CapExceeded: too many vertices for subset enumeration.
    """
    ok, problems = verify_signed_flow(sg, flow)
    if not ok:
        raise InvalidInput("not a circular flow: " + "; ".join(problems))
    if r is not None and Fraction(r) != Fraction(flow.p, flow.q):
        raise InvalidInput(f"r = {r} does not match the flow's p/q = {flow.p}/{flow.q}")
    G = sg.graph
    if G.n > caps.cut_vertices:
        raise CapExceeded(
            f"{G.n} vertices exceeds the cut enumeration cap {caps.cut_vertices}"
        )
    p, q = flow.p, flow.q
    half = p // 2
    want = {
        (1, True): q % p,
        (1, False): (p - q) % p,
        (-1, True): (half + q) % p,
        (-1, False): (half - q) % p,
    }
    arcs = flow.orientation.arcs(G)
    for mask in range(1, 2**G.n - 1):
        tight = True
        for t, h, eid in arcs:
            t_in = bool(mask >> t & 1)
            h_in = bool(mask >> h & 1)
            if t_in == h_in:
                continue
            if flow.values[eid] % p != want[(sg.signs[eid], t_in)]:
                tight = False
                break
        if tight and any((mask >> t & 1) != (mask >> h & 1) for t, h, _ in arcs):
            return frozenset(v for v in range(G.n) if mask >> v & 1)
    return None


# ======================================================================
# The doubled-graph construction
# ======================================================================


def boundary_from_signature(sg: SignedGraph, k: int) -> PcBoundary:
    """The boundary ``beta(v) = 2k * p+(v) (mod 4k)`` as a boundary of 2G.

    Values land in {0, 2k}; parity compliance is automatic because every
    degree of 2G is even, and the handshake on positive edges makes the
    number of odd-``p+`` vertices even, so the sum vanishes mod 4k.
    """
    if k < 1:
        raise InvalidInput("k must be at least 1")
    m = 4 * k
    values = tuple((2 * k if sg.p_plus(v) % 2 else 0) for v in range(sg.graph.n))
    if sum(values) % m:  # pragma: no cover - handshake forces this
        raise AssertionError("positive-degree handshake violated")
    return PcBoundary(m, values)


@dataclass(frozen=True)
class SignedFlowCertificate:
    """A verified (4k, 2k-2)-flow plus the strictness certificate."""

    k: int
    flow: SignedCircularFlow
    doubled_orientation: Orientation
    tight_cut: frozenset[int] | None

    @property
    def strict(self) -> bool:
        return self.tight_cut is None


def build_signed_flow(
    sg: SignedGraph,
    k: int,
    D: Orientation,
    pairing: Mapping[int, tuple[int, int]],
    doubled: Multigraph | None = None,
    caps: Caps = DEFAULT_CAPS,
) -> SignedFlowCertificate:
    """Fold a strongly connected boundary-correct orientation of 2G into a
    circular (4k, 2k-2)-flow on the signed graph.

    ``D`` must orient ``2G`` (as produced by :func:`~orient9.graph.double_graph`
    with ``pairing``), be strongly connected, and satisfy the boundary of
    :func:`boundary_from_signature` mod 4k; both are re-verified here.  The
    reference orientation ``D_1`` on G directs every edge from its lower
    endpoint to its higher one (any fixed choice works; this one is
    reproducible).

    Raises:
        InvalidInput: ``D`` fails strong connectivity or the boundary.
        FalsificationEvent: a tight cut exists despite strong connectivity
            (impossible if the construction is sound — never caught silently).
    """
    G = sg.graph
    if doubled is None:
        doubled, expected_pairing = double_graph(G)
        if dict(pairing) != expected_pairing:
            raise InvalidInput("pairing does not match double_graph(G)")
    p, q = 4 * k, 2 * k - 2
    beta = boundary_from_signature(sg, k)
    if not check_zk_orientation(doubled, D, p, ZkBoundary(p, beta.residues())):
        raise InvalidInput("orientation of 2G does not satisfy the signature boundary")
    if not D.is_strongly_connected(doubled):
        raise InvalidInput("orientation of 2G is not strongly connected")

    tails = {e.id: e.u < e.v for e in G.edges}  # D_1: lower id -> higher id
    d1 = Orientation(tails)
    values: dict[int, int] = {}
    for e in G.edges:
        c1, c2 = pairing[e.id]
        f1 = sum(1 if D.tails[c] == tails[e.id] else -1 for c in (c1, c2))
        f2 = 2 * k if sg.signs[e.id] == 1 else 0
        values[e.id] = f1 + f2
    flow = SignedCircularFlow(p, q, d1, values)

    for eid, val in values.items():
        expect = (2 * k - 2, 2 * k, 2 * k + 2) if sg.signs[eid] == 1 else (-2, 0, 2)
        if val not in expect:  # pragma: no cover - arithmetic identity
            raise AssertionError(f"edge {eid}: folded value {val} outside {expect}")
    ok, problems = verify_signed_flow(sg, flow)
    if not ok:
        raise FalsificationEvent(
            "folded flow fails the signed-flow clauses: " + "; ".join(problems)
        )
    cut = find_tight_cut(sg, flow, caps=caps)
    if cut is not None:
        raise FalsificationEvent(
            f"tight cut {sorted(cut)} found although the doubled orientation is "
            "strongly connected; the strictness argument is violated"
        )
    return SignedFlowCertificate(k, flow, D, None)


def signed_flow_pipeline(
    sg: SignedGraph, k: int, caps: Caps = DEFAULT_CAPS
) -> SignedFlowCertificate | None:
    """End-to-end: double, orient strongly with the signature boundary, fold.

    Returns None when the orientation engine certifies that no strongly
    connected orientation of 2G attains the boundary (the flow construction
    then has no starting point at this k).
    """
    doubled, pairing = double_graph(sg.graph)
    beta = boundary_from_signature(sg, k)
    D = find_sc_orientation(doubled, 4 * k, beta, caps)
    if D is None:
        return None
    return build_signed_flow(sg, k, D, pairing, doubled=doubled, caps=caps)
