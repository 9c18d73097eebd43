"""Boundary-constrained orientations: existence, construction, and the
strong-connectivity variants.

Algorithm notes
---------------

*Achievability DP.*  Whether an orientation exists with prescribed net
degrees ``d+ - d-`` (mod m) is decided by a dynamic program over edges.  The
state is the vector of net residues of vertices ``0..n-2`` (the last vertex
is forced by the zero-sum constraint), held as a boolean array of shape
``(m,)*(n-1)``.  Orienting edge ``uv`` as ``u -> v`` shifts the ``u`` axis by
``+1`` and the ``v`` axis by ``-1``, so each edge is two ``np.roll`` calls
and an OR.  Witnesses are rebuilt by walking the stored layers backwards.

*Strongly connected orientations.*  Exhausting ``2^e`` orientations is
hopeless at multiplicity 10+, but edges between the same pair act in bulk:
only the number ``j`` of them oriented forward matters for boundaries
(``net = 2j - m``), and only ``j = 0``, ``j = m`` versus ``0 < j < m``
matters for the arc set.  The search therefore enumerates one pattern in
{all-forward, all-backward, mixed} per parallel class, keeps the patterns
whose arc digraph is strongly connected, and runs the dynamic program over
classes with the ``j``-values each pattern allows.

*Parity.*  For odd moduli every zero-sum boundary is on the table.  For an
even modulus ``2k``, ``d+(v) - d-(v) == d(v) (mod 2)`` always, so the only
meaningful targets are parity-compliant boundaries: the even-``k`` membership
tests quantify over exactly those, with values in the balanced range
``{0, +-1, ..., +-k}`` (residue ``k`` written ``+k``).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

from ._caps import DEFAULT_CAPS, Caps
from .errors import InvalidInput
from .graph import Multigraph, contract_subset

__all__ = [
    "Orientation",
    "ZkBoundary",
    "PcBoundary",
    "AchievableSet",
    "achievable_boundaries",
    "find_zk_orientation",
    "modular_orientation",
    "check_zk_orientation",
    "is_strongly_zk_connected",
    "SzReport",
    "pc_boundaries",
    "sc_achievable_set",
    "find_sc_orientation",
    "is_in_SC",
    "ScReport",
    "is_weakly_contractible",
    "hamiltonian_sufficiency",
    "HamCertificate",
    "extend_by_contraction",
]


# ======================================================================
# Orientations and boundaries
# ======================================================================


@dataclass(frozen=True)
class Orientation:
    """A total orientation: ``tails[eid]`` true iff the stored ``u`` is the tail."""

    tails: dict[int, bool]

    @classmethod
    def from_tail_vertices(cls, G: Multigraph, tail_of: Mapping[int, int]) -> "Orientation":
        out = {}
        for eid, tau in tail_of.items():
            e = G.edge(eid)
            if tau not in (e.u, e.v):
                raise InvalidInput(f"vertex {tau} is not an endpoint of edge {eid}")
            out[eid] = tau == e.u
        return cls(out)

    def tail(self, G: Multigraph, eid: int) -> int:
        e = G.edge(eid)
        return e.u if self.tails[eid] else e.v

    def head(self, G: Multigraph, eid: int) -> int:
        e = G.edge(eid)
        return e.v if self.tails[eid] else e.u

    def arcs(self, G: Multigraph) -> list[tuple[int, int, int]]:
        """(tail, head, eid) triples, ascending eid."""
        return [(self.tail(G, eid), self.head(G, eid), eid) for eid in sorted(self.tails)]

    def covers(self, G: Multigraph) -> bool:
        return set(self.tails) == set(G.edge_ids())

    def net_degrees(self, G: Multigraph) -> list[int]:
        """d+(v) - d-(v) per vertex (exact integers, not residues)."""
        net = [0] * G.n
        for t, h, _ in self.arcs(G):
            net[t] += 1
            net[h] -= 1
        return net

    def reversed(self) -> "Orientation":
        return Orientation({eid: not b for eid, b in self.tails.items()})

    def restricted(self, eids: Iterable[int]) -> "Orientation":
        keep = set(eids)
        return Orientation({eid: b for eid, b in self.tails.items() if eid in keep})

    def merged(self, other: "Orientation") -> "Orientation":
        overlap = set(self.tails) & set(other.tails)
        if any(self.tails[e] != other.tails[e] for e in overlap):
            raise InvalidInput("orientations disagree on shared edges")
        return Orientation({**self.tails, **other.tails})

    def is_strongly_connected(self, G: Multigraph) -> bool:
        """Every vertex reachable from 0 along arcs, forwards and backwards."""
        if not self.covers(G):
            raise InvalidInput("orientation does not cover the graph")
        if G.n == 1:
            return True
        fwd: list[list[int]] = [[] for _ in range(G.n)]
        bwd: list[list[int]] = [[] for _ in range(G.n)]
        for t, h, _ in self.arcs(G):
            fwd[t].append(h)
            bwd[h].append(t)
        for adj in (fwd, bwd):
            seen = {0}
            stack = [0]
            while stack:
                for w in adj[stack.pop()]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            if len(seen) != G.n:
                return False
        return True


@dataclass(frozen=True)
class ZkBoundary:
    """A zero-sum boundary mod k; values stored as residues ``0..k-1``."""

    k: int
    values: tuple[int, ...]

    def __post_init__(self):
        if self.k < 2:
            raise InvalidInput("boundary modulus must be at least 2")
        object.__setattr__(self, "values", tuple(v % self.k for v in self.values))
        if sum(self.values) % self.k != 0:
            raise InvalidInput("boundary values must sum to 0 mod k")

    @classmethod
    def zero(cls, k: int, n: int) -> "ZkBoundary":
        return cls(k, (0,) * n)

    @property
    def n(self) -> int:
        return len(self.values)

    def residues(self) -> tuple[int, ...]:
        return self.values


def _balanced(r: int, m: int) -> int:
    """Balanced representative of ``r`` mod even ``m``: in ``{-(m/2-1), ..., m/2}``."""
    r %= m
    return r if r <= m // 2 else r - m


@dataclass(frozen=True)
class PcBoundary:
    """A parity-compliant boundary for an even modulus ``m = 2k``.

    Values are balanced ints in ``{0, +-1, ..., +-k}`` with residue ``k``
    canonically written ``+k``; the sum must vanish mod ``m``.  Parity
    compliance (``beta(v) == d(v) mod 2``) is a property relative to a graph
    and is checked by :meth:`validate_for`.
    """

    m: int
    values: tuple[int, ...]

    def __post_init__(self):
        if self.m < 2 or self.m % 2:
            raise InvalidInput("parity-compliant boundaries need an even modulus")
        k = self.m // 2
        vals = tuple(self.values)
        for v in vals:
            if not -k < v <= k:
                raise InvalidInput(
                    f"value {v} outside the canonical balanced range (-{k - 1}..{k})"
                )
        if sum(vals) % self.m != 0:
            raise InvalidInput("boundary values must sum to 0 mod m")

    @property
    def n(self) -> int:
        return len(self.values)

    def residues(self) -> tuple[int, ...]:
        return tuple(v % self.m for v in self.values)

    def validate_for(self, G: Multigraph) -> None:
        if self.n != G.n:
            raise InvalidInput("boundary length does not match the vertex count")
        for v, b in enumerate(self.values):
            if (b - G.degree(v)) % 2:
                raise InvalidInput(f"value {b} at vertex {v} breaks parity compliance")


# ======================================================================
# Achievability DP
# ======================================================================


@dataclass
class AchievableSet:
    """The set of net-degree residue vectors reachable by some orientation.

    ``data`` is boolean with shape ``(m,)*(n-1)``; coordinate ``i`` is the
    residue at vertex ``i``, vertex ``n-1`` being determined by zero sum.
    """

    m: int
    n: int
    data: np.ndarray

    def contains(self, residues: Sequence[int]) -> bool:
        r = [x % self.m for x in residues]
        if len(r) != self.n:
            raise InvalidInput("residue vector has the wrong length")
        if sum(r) % self.m:
            return False
        return bool(self.data[tuple(r[: self.n - 1])])

    def is_full(self) -> bool:
        return bool(self.data.all())

    def count(self) -> int:
        return int(self.data.sum())

    def first_missing(self, required: np.ndarray | None = None) -> tuple[int, ...] | None:
        """Lexicographically first absent state (within ``required`` if given)."""
        gap = ~self.data if required is None else (required & ~self.data)
        if not gap.any():
            return None
        idx = np.unravel_index(int(np.argmax(gap)), self.data.shape)
        full = [int(i) for i in idx]
        full.append((-sum(full)) % self.m)
        return tuple(full)

    def negated(self) -> "AchievableSet":
        """The image under beta -> -beta (achieved by reversing every edge)."""
        out = self.data
        for ax in range(out.ndim):
            out = np.roll(np.flip(out, axis=ax), 1, axis=ax)
        return AchievableSet(self.m, self.n, out)


def _state_count(m: int, n: int, caps: Caps) -> int:
    states = m ** max(n - 1, 0)
    caps.require(states, "boundary_states")
    return states


def _edge_step(state: np.ndarray, n: int, u: int, v: int) -> np.ndarray:
    """One DP layer: OR of the two directions of an edge ``uv``."""
    parts = []
    for a, b in ((u, v), (v, u)):  # a is the tail
        s = state
        if a < n - 1:
            s = np.roll(s, 1, axis=a)
        if b < n - 1:
            s = np.roll(s, -1, axis=b)
        parts.append(s)
    return parts[0] | parts[1]


class _LayerCache:
    """DP layers with bounded memory.

    Keeps every layer when that fits in the entry budget; otherwise keeps
    sqrt-spaced snapshots and recomputes the window around a queried index.
    The reconstruction walk visits indices in descending order, so each
    window is rebuilt at most once.
    """

    _ENTRY_BUDGET = 200_000_000

    def __init__(self, G: Multigraph, m: int, order, states: int):
        self.n = G.n
        e = len(order)
        self.order = order
        self.stride = 1 if (e + 1) * states <= self._ENTRY_BUDGET else math.isqrt(e) + 1
        self.snapshots: dict[int, np.ndarray] = {}
        state = np.zeros((m,) * (G.n - 1), dtype=bool)
        state[(0,) * (G.n - 1)] = True
        self.snapshots[0] = state
        for i, edge in enumerate(order, start=1):
            state = _edge_step(state, G.n, edge.u, edge.v)
            if i % self.stride == 0 or i == e:
                self.snapshots[i] = state
        self.final = state
        self._window_base: int | None = None
        self._window: list[np.ndarray] = []

    def layer(self, i: int) -> np.ndarray:
        if i in self.snapshots:
            return self.snapshots[i]
        base = (i // self.stride) * self.stride
        if self._window_base != base:
            state = self.snapshots[base]
            window = [state]
            for edge in self.order[base : base + self.stride - 1]:
                state = _edge_step(state, self.n, edge.u, edge.v)
                window.append(state)
            self._window_base, self._window = base, window
        return self._window[i - base]


def _dp_layers(G: Multigraph, m: int, keep_layers: bool, caps: Caps):
    """Run the edge DP; return (final, layer cache or None, edge order)."""
    states = _state_count(m, G.n, caps)
    order = sorted(G.edges, key=lambda e: (e.pair, e.id))
    if keep_layers:
        cache = _LayerCache(G, m, order, states)
        return cache.final, cache, order
    shape = (m,) * (G.n - 1)
    state = np.zeros(shape, dtype=bool)
    state[(0,) * (G.n - 1)] = True
    for e in order:
        state = _edge_step(state, G.n, e.u, e.v)
    return state, None, order


def achievable_boundaries(G: Multigraph, m: int, caps: Caps = DEFAULT_CAPS) -> AchievableSet:
    """All net-degree boundary vectors (mod m) realized by some orientation."""
    if m < 2:
        raise InvalidInput("modulus must be at least 2")
    final, _, _ = _dp_layers(G, m, keep_layers=False, caps=caps)
    return AchievableSet(m, G.n, final)


def find_zk_orientation(
    G: Multigraph, k: int, beta: ZkBoundary, caps: Caps = DEFAULT_CAPS
) -> Orientation | None:
    """An orientation with ``d+ - d- == beta (mod k)``, or None if none exists.

    The DP layers are kept and walked backwards; at each edge the ``u -> v``
    direction is preferred when both work, making the witness deterministic.
    """
    if beta.k != k:
        raise InvalidInput("boundary modulus mismatch")
    if beta.n != G.n:
        raise InvalidInput("boundary length does not match the vertex count")
    final, layers, order = _dp_layers(G, k, keep_layers=True, caps=caps)
    target = list(beta.residues())
    aset = AchievableSet(k, G.n, final)
    if not aset.contains(target):
        return None
    t = target[: G.n - 1]
    tails: dict[int, bool] = {}
    for i in range(len(order) - 1, -1, -1):
        e = order[i]
        chosen = None
        for u, v, tail_is_u in ((e.u, e.v, True), (e.v, e.u, False)):
            p = list(t)
            if u < G.n - 1:
                p[u] = (p[u] - 1) % k
            if v < G.n - 1:
                p[v] = (p[v] + 1) % k
            if layers.layer(i)[tuple(p)]:
                chosen = (p, tail_is_u)
                break
        if chosen is None:  # pragma: no cover - DP layers guarantee a path
            raise AssertionError("witness reconstruction lost the DP trail")
        t, tail_is_u = chosen
        tails[e.id] = tail_is_u
    D = Orientation(tails)
    if not check_zk_orientation(G, D, k, beta):  # pragma: no cover - independent check
        raise AssertionError("reconstructed orientation fails its own boundary")
    return D


def check_zk_orientation(G: Multigraph, D: Orientation, k: int, beta: ZkBoundary) -> bool:
    """Independent checker: net degree ``== beta`` mod k at every vertex."""
    if not D.covers(G):
        return False
    net = D.net_degrees(G)
    return all((net[v] - beta.residues()[v]) % k == 0 for v in range(G.n))


def modular_orientation(G: Multigraph, m: int, caps: Caps = DEFAULT_CAPS) -> Orientation | None:
    """An orientation with ``d+ == d- (mod m)`` everywhere (m odd), or None."""
    if m % 2 == 0:
        raise InvalidInput("modular orientations are defined for odd moduli")
    D = find_zk_orientation(G, m, ZkBoundary.zero(m, G.n), caps)
    if D is not None and not check_zk_orientation(G, D, m, ZkBoundary.zero(m, G.n)):
        raise AssertionError("solver/checker disagreement")  # pragma: no cover
    return D


# ======================================================================
# Strong Z_k-connectivity
# ======================================================================


def _parity_mask(G: Multigraph, m: int) -> np.ndarray:
    """Boolean mask over states whose residues match degree parity per vertex."""
    shape = (m,) * (G.n - 1)
    mask = np.ones((), dtype=bool)
    residues = np.arange(m)
    for v in range(G.n - 1):
        axis_mask = (residues % 2) == (G.degree(v) % 2)
        mask = mask[..., None] & axis_mask
    return mask.reshape(shape)


@dataclass(frozen=True)
class SzReport:
    """Membership verdict with the first failing boundary as witness."""

    member: bool
    k: int
    modulus: int
    witness: ZkBoundary | PcBoundary | None = None

    def __bool__(self) -> bool:
        return self.member


def is_strongly_zk_connected(G: Multigraph, k: int, caps: Caps = DEFAULT_CAPS) -> SzReport:
    """Whether every boundary admits an orientation.

    Odd ``k``: every zero-sum boundary mod ``k`` must be achievable.  Even
    ``k``: net degrees are pinned to degree parity, so the test quantifies
    over parity-compliant boundaries with modulus ``2k`` instead — matching
    how the even-indexed families are used by the strong-connectivity layer.
    """
    if k < 2:
        raise InvalidInput("k must be at least 2")
    if k % 2:
        aset = achievable_boundaries(G, k, caps)
        missing = aset.first_missing()
        if missing is None:
            return SzReport(True, k, k)
        return SzReport(False, k, k, ZkBoundary(k, missing))
    m = 2 * k
    aset = achievable_boundaries(G, m, caps)
    missing = aset.first_missing(required=_parity_mask(G, m))
    if missing is None:
        return SzReport(True, k, m)
    witness = PcBoundary(m, tuple(_balanced(r, m) for r in missing))
    return SzReport(False, k, m, witness)


# ======================================================================
# Parity-compliant boundaries and strongly connected orientations
# ======================================================================


def pc_boundaries(G: Multigraph, m: int) -> Iterator[PcBoundary]:
    """All parity-compliant boundaries of G for even modulus ``m``, sorted.

    Enumerates the values of vertices ``0..n-2`` in ascending numeric order
    (balanced range, parity matching the degree) and forces the last vertex.
    """
    if m < 2 or m % 2:
        raise InvalidInput("parity-compliant boundaries need an even modulus")
    k = m // 2
    allowed = []
    for v in range(G.n - 1):
        par = G.degree(v) % 2
        allowed.append([x for x in range(-k + 1, k + 1) if x % 2 == par % 2])
    for head in itertools.product(*allowed):
        last = _balanced(-sum(head), m)
        if (last - G.degree(G.n - 1)) % 2:
            continue  # unreachable: the handshake lemma forces this parity
        yield PcBoundary(m, (*head, last))


def _pattern_arcs(code: str, u: int, v: int) -> list[tuple[int, int]]:
    if code == "F":
        return [(u, v)]
    if code == "B":
        return [(v, u)]
    return [(u, v), (v, u)]


def _digraph_strong(n: int, arcs: Iterable[tuple[int, int]]) -> bool:
    fwd: list[list[int]] = [[] for _ in range(n)]
    bwd: list[list[int]] = [[] for _ in range(n)]
    for a, b in arcs:
        fwd[a].append(b)
        bwd[b].append(a)
    for adj in (fwd, bwd):
        seen = {0}
        stack = [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != n:
            return False
    return True


def _pattern_j_values(code: str, mult: int) -> list[int]:
    if code == "F":
        return [mult]
    if code == "B":
        return [0]
    return list(range(1, mult))


def _iter_strong_patterns(G: Multigraph, caps: Caps):
    """Yield (pairs, codes) with a strongly connected arc digraph."""
    pairs = list(G.pair_classes().items())
    choices = []
    for (_, eids) in pairs:
        codes = ["F", "B"] + (["M"] if len(eids) >= 2 else [])
        choices.append(codes)
    caps.require(math.prod(len(c) for c in choices), "sc_combinations")
    for combo in itertools.product(*choices):
        arcs = []
        for ((u, v), _), code in zip(pairs, combo):
            arcs.extend(_pattern_arcs(code, u, v))
        if _digraph_strong(G.n, arcs):
            yield pairs, combo


def _pattern_dp(
    G: Multigraph, m: int, pairs, combo, keep_layers: bool
):
    shape = (m,) * (G.n - 1)
    state = np.zeros(shape, dtype=bool)
    state[(0,) * (G.n - 1)] = True
    layers = [state] if keep_layers else None
    for ((u, v), eids), code in zip(pairs, combo):
        mult = len(eids)
        acc = None
        for j in _pattern_j_values(code, mult):
            net = 2 * j - mult
            s = state
            if u < G.n - 1:
                s = np.roll(s, net, axis=u)
            if v < G.n - 1:
                s = np.roll(s, -net, axis=v)
            acc = s if acc is None else (acc | s)
        state = acc
        if keep_layers:
            layers.append(state)
    return state, layers


def sc_achievable_set(G: Multigraph, m: int, caps: Caps = DEFAULT_CAPS) -> AchievableSet:
    """Boundaries (mod even m) achievable by strongly connected orientations."""
    if m < 2 or m % 2:
        raise InvalidInput("strongly connected orientation search uses an even modulus")
    if not G.is_connected() or G.n < 2:
        raise InvalidInput("strongly connected orientations need a connected graph on >= 2 vertices")
    _state_count(m, G.n, caps)
    total = np.zeros((m,) * (G.n - 1), dtype=bool)
    for pairs, combo in _iter_strong_patterns(G, caps):
        final, _ = _pattern_dp(G, m, pairs, combo, keep_layers=False)
        total |= final
    return AchievableSet(m, G.n, total)


def find_sc_orientation(
    G: Multigraph, m: int, beta: PcBoundary, caps: Caps = DEFAULT_CAPS
) -> Orientation | None:
    """A strongly connected orientation with boundary ``beta`` (mod even m).

    Scans parallel-class direction patterns in a fixed order; within the
    first pattern that reaches the target, the smallest forward count ``j``
    is chosen per class and the ``j`` lowest edge ids are oriented forward.
    """
    if beta.m != m:
        raise InvalidInput("boundary modulus mismatch")
    beta.validate_for(G)
    if not G.is_connected() or G.n < 2:
        raise InvalidInput("strongly connected orientations need a connected graph on >= 2 vertices")
    _state_count(m, G.n, caps)
    target = list(beta.residues())[: G.n - 1]
    for pairs, combo in _iter_strong_patterns(G, caps):
        final, layers = _pattern_dp(G, m, pairs, combo, keep_layers=True)
        if not final[tuple(target)]:
            continue
        tails: dict[int, bool] = {}
        t = list(target)
        for i in range(len(pairs) - 1, -1, -1):
            ((u, v), eids), code = pairs[i], combo[i]
            mult = len(eids)
            found = None
            for j in _pattern_j_values(code, mult):
                net = 2 * j - mult
                p = list(t)
                if u < G.n - 1:
                    p[u] = (p[u] - net) % m
                if v < G.n - 1:
                    p[v] = (p[v] + net) % m
                if layers[i][tuple(p)]:
                    found = (j, p)
                    break
            if found is None:  # pragma: no cover - layer membership guarantees a path
                raise AssertionError("pattern DP lost its trail")
            j, t = found
            for idx, eid in enumerate(sorted(eids)):
                forward = idx < j
                e = G.edge(eid)
                tails[eid] = forward if e.u == u else not forward
        D = Orientation(tails)
        ok = check_zk_orientation(G, D, m, ZkBoundary(m, beta.residues()))
        if not (ok and D.is_strongly_connected(G)):  # pragma: no cover
            raise AssertionError("reconstructed orientation failed verification")
        return D
    return None


@dataclass(frozen=True)
class ScReport:
    """Two-layer membership verdict (boundary coverage by strongly connected
    orientations), with the first failing parity-compliant boundary."""

    member: bool
    k: int
    modulus: int
    witness: PcBoundary | None = None

    def __bool__(self) -> bool:
        return self.member


def is_in_SC(G: Multigraph, k: int, caps: Caps = DEFAULT_CAPS) -> ScReport:
    """Every parity-compliant boundary mod ``2k`` admits a strongly connected
    orientation."""
    m = 2 * k
    aset = sc_achievable_set(G, m, caps)
    missing = aset.first_missing(required=_parity_mask(G, m))
    if missing is None:
        return ScReport(True, k, m)
    return ScReport(False, k, m, PcBoundary(m, tuple(_balanced(r, m) for r in missing)))


def is_weakly_contractible(H: Multigraph, k: int, caps: Caps = DEFAULT_CAPS) -> ScReport:
    """``H + xy`` passes :func:`is_in_SC` for every vertex pair, adjacent or not."""
    for x in range(H.n):
        for y in range(x + 1, H.n):
            plus, _ = H.with_extra_edges([(x, y)])
            rep = is_in_SC(plus, k, caps)
            if not rep:
                return rep
    return ScReport(True, k, 2 * k)


# ======================================================================
# Hamiltonian sufficiency
# ======================================================================


@dataclass(frozen=True)
class HamCertificate:
    """A sufficient-condition certificate: cycle/path edges removed, remainder verified."""

    mode: str  # "SC" or "W"
    k: int
    cycles: dict[tuple[int, int] | None, tuple[tuple[int, ...], tuple[int, ...]]] = field(
        default_factory=dict
    )
    # key None for the single SC cycle; (x, y) per pair in W mode;
    # value = (vertex sequence, removed edge ids)


def _ham_sequences(G: Multigraph, closed: bool, start: int | None = None, end: int | None = None):
    """Hamiltonian cycles (closed) or start->end paths on the underlying graph."""
    n = G.n
    if n == 1:
        return
    if closed and n == 2:
        # a cycle through two vertices needs two distinct parallel edges
        if G.mu(0, 1) >= 2:
            yield (0, 1)
        return
    firsts = [0] if closed else [start]
    for first in firsts:
        rest = [v for v in range(n) if v != first]
        for perm in itertools.permutations(rest):
            if closed and perm[0] > perm[-1]:
                continue  # kill the reflection duplicate
            seq = (first, *perm)
            if not closed and seq[-1] != end:
                continue
            pairs = zip(seq, seq[1:] + (seq[0],)) if closed else zip(seq, seq[1:])
            if all(G.mu(a, b) >= 1 for a, b in pairs):
                yield seq


def _remove_along(G: Multigraph, seq: tuple[int, ...], closed: bool):
    steps = list(zip(seq, seq[1:] + (seq[0],))) if closed else list(zip(seq, seq[1:]))
    used: set[int] = set()
    eids = []
    for a, b in steps:
        cands = [
            eid
            for eid in G.incident(a)
            if G.edge(eid).other(a) == b and eid not in used
        ]
        if not cands:
            return None, None
        eid = min(cands)
        used.add(eid)
        eids.append(eid)
    return G.without_edges(eids), tuple(eids)


def hamiltonian_sufficiency(
    G: Multigraph, k: int, mode: str = "SC", caps: Caps = DEFAULT_CAPS
) -> HamCertificate | None:
    """Fast sufficient check, never a disproof (absence means "inconclusive").

    ``mode="SC"``: look for a Hamiltonian cycle whose removal leaves a graph
    passing :func:`is_strongly_zk_connected` — a cyclically oriented copy of
    the cycle then upgrades any boundary-achieving orientation to a strongly
    connected one.  ``mode="W"``: the same with a Hamiltonian path per vertex
    pair (the path plus the pair's virtual edge plays the cycle's role).
    """
    if mode not in ("SC", "W"):
        raise InvalidInput("mode must be 'SC' or 'W'")
    if not G.is_connected():
        return None
    if mode == "SC":
        for seq in _ham_sequences(G, closed=True):
            rest, eids = _remove_along(G, seq, closed=True)
            if rest is not None and is_strongly_zk_connected(rest, k, caps):
                return HamCertificate("SC", k, {None: (seq, eids)})
        return None
    found: dict[tuple[int, int] | None, tuple[tuple[int, ...], tuple[int, ...]]] = {}
    for x in range(G.n):
        for y in range(x + 1, G.n):
            hit = None
            for seq in _ham_sequences(G, closed=False, start=x, end=y):
                rest, eids = _remove_along(G, seq, closed=False)
                if rest is not None and is_strongly_zk_connected(rest, k, caps):
                    hit = (seq, eids)
                    break
            if hit is None:
                return None
            found[(x, y)] = hit
    return HamCertificate("W", k, found)


# ======================================================================
# Extension through a contracted subgraph
# ======================================================================


def extend_by_contraction(
    G: Multigraph,
    S: Iterable[int],
    D_quot: Orientation,
    beta: ZkBoundary,
    caps: Caps = DEFAULT_CAPS,
) -> Orientation:
    """Pull an orientation of ``G/S`` back to all of ``G``.

    ``D_quot`` must be a boundary-correct orientation of the contraction
    ``G/S`` for the boundary induced by ``beta`` (the merged vertex carries
    the sum over ``S``).  Cross and outside edges copy their direction from
    ``D_quot`` (ids are preserved by contraction); the interior of ``S`` then
    needs the boundary obtained by subtracting the fixed cross-edge
    contributions from ``beta``, which is solved inside ``G[S]``.

    Raises:
        InvalidInput: ``D_quot`` has the wrong boundary, or the interior
            boundary is unachievable in ``G[S]`` (that is, ``G[S]`` falls
            short of full achievability right where it matters).
    """
    k = beta.k
    if beta.n != G.n:
        raise InvalidInput("boundary length does not match the vertex count")
    Ss = frozenset(S)
    res = contract_subset(G, Ss)
    quot, vmap = res.graph, res.vertex_map
    merged = vmap[min(Ss)]
    induced = [0] * quot.n
    for v in range(G.n):
        induced[vmap[v]] = (induced[vmap[v]] + beta.residues()[v]) % k
    if not check_zk_orientation(quot, D_quot, k, ZkBoundary(k, tuple(induced))):
        raise InvalidInput("quotient orientation does not match the induced boundary")

    # fix cross/outside edges; translate tail vertices back to G's labels
    tails: dict[int, bool] = {}
    cross_net = {v: 0 for v in Ss}
    for qe in quot.edges:
        ge = G.edge(qe.id)
        tail_new = qe.u if D_quot.tails[qe.id] else qe.v
        if tail_new == merged:
            tail_old = ge.u if ge.u in Ss else ge.v
        else:
            tail_old = ge.u if vmap[ge.u] == tail_new else ge.v
        tails[qe.id] = tail_old == ge.u
        if ge.u in Ss or ge.v in Ss:
            inside = ge.u if ge.u in Ss else ge.v
            cross_net[inside] += 1 if tail_old == inside else -1

    H, hmap = G.induced_subgraph(Ss)
    hbeta = [0] * H.n
    for v in Ss:
        hbeta[hmap[v]] = (beta.residues()[v] - cross_net[v]) % k
    D_H = find_zk_orientation(H, k, ZkBoundary(k, tuple(hbeta)), caps)
    if D_H is None:
        raise InvalidInput(
            "interior boundary is unachievable in G[S]; the contracted block is "
            "not fully Z_k-achievable where needed"
        )
    inv = {new: old for old, new in hmap.items()}
    for eid, b in D_H.tails.items():
        he = H.edge(eid)
        tail_old = inv[he.u] if b else inv[he.v]
        tails[eid] = tail_old == G.edge(eid).u
    D = Orientation(tails)
    if not check_zk_orientation(G, D, k, beta):  # pragma: no cover - assembly check
        raise AssertionError("assembled orientation fails the boundary checker")
    return D
