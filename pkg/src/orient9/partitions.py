"""Vertex partitions, the cut weight function, and the small-family tests.

The weight of a partition P of V(G) with t blocks is

    w_G(P) = sum_i d(P_i) - 23 t + 42 = 2 cross(P) - 23 t + 42,

where d(P_i) counts edges leaving block P_i.  The constants are configurable
(:class:`WeightConstants`); 23/42 are the defaults used everywhere.

Families:
    N  = { aK_2 : a <= 7 } u { T_{a,b,c} : a+b+c <= 15 }
    W* = { 8K_2 } u { T_{a,b,c} : a+b+c = 16, min degree >= 9 }

with T_{a,b,c} the triangle with pair multiplicities a, b, c >= 1.  A graph
is N-good when w(G) >= 0, G is not in N, and no nontrivial quotient lands in
N u W*; S-good when w(G) >= 0 and no quotient at all (the identity quotient
included) lands in N u W*.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

from ._caps import DEFAULT_CAPS, Caps
from .errors import CapExceeded, InvalidInput
from .graph import Multigraph, contract_partition, edge_connectivity

__all__ = [
    "Partition",
    "WeightConstants",
    "DEFAULT_WEIGHTS",
    "FamilyTag",
    "GoodnessReport",
    "weight_of_partition",
    "min_weight",
    "classify_family",
    "is_N_good",
    "is_S_good",
    "refinement_identity",
    "partition_bound_check",
    "iter_partitions",
    "quotient_partitions",
    "gap_threshold",
    "GAP_THRESHOLDS",
]


class Partition:
    """A partition of {0..n-1} into t >= 2 disjoint nonempty blocks.

    Blocks are stored as frozensets sorted by minimum element.  The
    single-block partition is deliberately unconstructible.
    """

    __slots__ = ("blocks", "n")

    def __init__(self, blocks: Iterable[Iterable[int]], n: int):
        bs = tuple(sorted((frozenset(b) for b in blocks), key=min))
        if len(bs) < 2:
            raise InvalidInput("partitions with a single block are excluded")
        if any(not b for b in bs):
            raise InvalidInput("empty block")
        seen: set[int] = set()
        for b in bs:
            if b & seen:
                raise InvalidInput("blocks are not disjoint")
            seen |= b
        if seen != set(range(n)):
            raise InvalidInput(f"blocks do not cover 0..{n - 1}")
        object.__setattr__(self, "blocks", bs)
        object.__setattr__(self, "n", n)

    def __setattr__(self, *args):  # pragma: no cover - defensive
        raise AttributeError("Partition is immutable")

    @classmethod
    def trivial(cls, n: int) -> "Partition":
        """The all-singletons partition (t = n)."""
        return cls(([v] for v in range(n)), n)

    @classmethod
    def from_assignment(cls, assign: Sequence[int]) -> "Partition":
        blocks: dict[int, list[int]] = {}
        for v, b in enumerate(assign):
            blocks.setdefault(b, []).append(v)
        return cls(blocks.values(), len(assign))

    @property
    def t(self) -> int:
        return len(self.blocks)

    @property
    def sizes(self) -> tuple[int, ...]:
        """Block sizes, non-increasing."""
        return tuple(sorted((len(b) for b in self.blocks), reverse=True))

    def is_trivial(self) -> bool:
        return all(len(b) == 1 for b in self.blocks)

    def block_of(self) -> list[int]:
        out = [0] * self.n
        for i, b in enumerate(self.blocks):
            for v in b:
                out[v] = i
        return out

    def encoding(self) -> tuple[int, ...]:
        """Restricted-growth encoding; lexicographic tie-break key."""
        return tuple(self.block_of())

    def __eq__(self, other):
        return isinstance(other, Partition) and self.n == other.n and self.blocks == other.blocks

    def __hash__(self):
        return hash((self.n, self.blocks))

    def __repr__(self):
        inner = " | ".join("{" + ",".join(map(str, sorted(b))) + "}" for b in self.blocks)
        return f"Partition({inner})"


@dataclass(frozen=True)
class WeightConstants:
    """Coefficients of the weight function ``2*cross - cut_coeff*t + offset``."""

    cut_coeff: int = 23
    offset: int = 42

    @property
    def refinement_constant(self) -> int:
        """The additive constant of the refinement identity (offset - cut_coeff)."""
        return self.offset - self.cut_coeff


DEFAULT_WEIGHTS = WeightConstants()


# ======================================================================
# Weight
# ======================================================================


def weight_of_partition(G: Multigraph, P: Partition, weights: WeightConstants = DEFAULT_WEIGHTS) -> int:
    """Exact weight ``sum_i d(P_i) - cut_coeff*t + offset`` of a partition."""
    if P.n != G.n:
        raise InvalidInput("partition is over the wrong vertex set")
    block = P.block_of()
    cross = sum(1 for e in G.edges if block[e.u] != block[e.v])
    return 2 * cross - weights.cut_coeff * P.t + weights.offset


def _iter_rgs(n: int) -> Iterator[list[int]]:
    """Restricted-growth strings over n items, lexicographic (includes t=1)."""
    assign = [0] * n

    def rec(i: int, mx: int):
        if i == n:
            yield assign
            return
        for b in range(mx + 2):
            assign[i] = b
            yield from rec(i + 1, max(mx, b))

    yield from rec(1, 0)


def iter_partitions(n: int, ts: Iterable[int] | None = None) -> Iterator[Partition]:
    """All partitions of {0..n-1} with t >= 2, optionally restricted to t in ``ts``."""
    want = None if ts is None else set(ts)
    for assign in _iter_rgs(n):
        t = max(assign) + 1
        if t < 2:
            continue
        if want is not None and t not in want:
            continue
        yield Partition.from_assignment(assign)


def quotient_partitions(n: int, include_trivial: bool = False) -> Iterator[Partition]:
    """Partitions whose quotient could possibly land in N u W* (t in {2, 3}).

    Any quotient by a partition with t >= 4 has at least four vertices and is
    automatically outside both families, so checking t in {2, 3} is complete.
    ``include_trivial`` keeps the all-singletons partition when n <= 3 (its
    quotient is G itself).
    """
    for P in iter_partitions(n, ts=(2, 3)):
        if P.is_trivial() and not include_trivial:
            continue
        yield P


def min_weight(
    G: Multigraph,
    weights: WeightConstants = DEFAULT_WEIGHTS,
    caps: Caps = DEFAULT_CAPS,
) -> tuple[int, Partition]:
    """Exact minimum of w_G over all partitions (t >= 2), with a witness.

    Branch and bound over restricted-growth strings: vertices are placed in
    non-increasing degree order; a prefix is cut off when even the most
    optimistic completion (no further cross edges, every remaining vertex
    opening a fresh block) cannot beat the incumbent.  Works on disconnected
    graphs too, though the families above only ever contain connected ones.

    Raises:
        CapExceeded: more vertices than the partition enumeration cap.
    """
    n = G.n
    if n < 2:
        raise InvalidInput("weight minimization needs at least two vertices")
    if n > caps.partition_vertices:
        raise CapExceeded(
            f"instance too large: {n} vertices exceeds the partition cap "
            f"{caps.partition_vertices}"
        )
    order = sorted(range(n), key=lambda v: (-G.degree(v), v))
    pos = {v: i for i, v in enumerate(order)}
    mu = [[0] * n for _ in range(n)]
    for e in G.edges:
        i, j = pos[e.u], pos[e.v]
        mu[i][j] += 1
        mu[j][i] += 1
    # back-edges only: for vertex at position i, the positions j < i with mu > 0
    back = [[j for j in range(i) if mu[i][j]] for i in range(n)]

    coeff, offset = weights.cut_coeff, weights.offset
    best = 2 * G.num_edges() - coeff * n + offset  # trivial partition
    best_assign = list(range(n))
    assign = [0] * n

    def rec(i: int, t: int, cut: int) -> None:
        nonlocal best, best_assign
        if i == n:
            if t >= 2:
                w = 2 * cut - coeff * t + offset
                if w < best:
                    best = w
                    best_assign = assign[:]
            return
        if 2 * cut - coeff * (t + (n - i)) + offset >= best:
            return
        row = mu[i]
        same = [0] * (t + 1)
        total = 0
        for j in back[i]:
            m = row[j]
            total += m
            same[assign[j]] += m
        for b in range(t + 1):
            assign[i] = b
            rec(i + 1, t if b < t else t + 1, cut + total - same[b])

    rec(1, 1, 0)  # vertex at position 0 pinned to block 0
    by_vertex = [0] * n
    for i, v in enumerate(order):
        by_vertex[v] = best_assign[i]
    return best, Partition.from_assignment(by_vertex)


# ======================================================================
# Families
# ======================================================================


@dataclass(frozen=True)
class FamilyTag:
    """Membership of a graph in the families N and W*."""

    in_N: bool
    in_W_star: bool
    shape: str | None = None  # "parallel" (aK_2) or "triangle" (T_{a,b,c})
    params: tuple[int, ...] | None = None

    @property
    def in_either(self) -> bool:
        return self.in_N or self.in_W_star

    def describe(self) -> str:
        if self.shape == "parallel":
            base = f"{self.params[0]}K_2"
        elif self.shape == "triangle":
            base = "T_{" + ",".join(map(str, self.params)) + "}"
        else:
            return "outside both families"
        tags = [t for t, m in (("N", self.in_N), ("W*", self.in_W_star)) if m]
        return f"{base}: " + (("in " + " and ".join(tags)) if tags else "outside both families")


def classify_family(G: Multigraph) -> FamilyTag:
    """Exact membership in N and W*, from isomorphism-invariant data only."""
    if G.n not in (2, 3) or not G.is_connected():
        return FamilyTag(False, False)
    if G.n == 2:
        alpha = G.num_edges()
        return FamilyTag(alpha <= 7, alpha == 8, "parallel", (alpha,))
    a, b, c = sorted((G.mu(0, 1), G.mu(1, 2), G.mu(0, 2)))
    if a == 0:
        return FamilyTag(False, False)
    s = a + b + c
    # min degree of T_{a,b,c} is the sum of the two smallest multiplicities
    return FamilyTag(s <= 15, s == 16 and a + b >= 9, "triangle", (a, b, c))


@dataclass(frozen=True)
class GoodnessReport:
    """Outcome of an N-good / S-good test, with a witness when it fails."""

    good: bool
    weight: int
    failure: str | None = None
    witness_partition: Partition | None = None
    witness_family: FamilyTag | None = None

    def __bool__(self) -> bool:
        return self.good


def _goodness_scan(
    G: Multigraph,
    include_trivial_quotient: bool,
    weights: WeightConstants,
    caps: Caps,
) -> GoodnessReport:
    if G.n < 2:
        raise InvalidInput("goodness tests need at least two vertices")
    if not G.is_connected():
        raise InvalidInput("goodness tests are defined for connected graphs")
    w, wit = min_weight(G, weights, caps)
    if w < 0:
        return GoodnessReport(False, w, "negative weight", wit)
    for Q in quotient_partitions(G.n, include_trivial=include_trivial_quotient):
        quo = contract_partition(G, Q.blocks).graph
        tag = classify_family(quo)
        if tag.in_either:
            return GoodnessReport(False, w, "quotient lands in N u W*", Q, tag)
    return GoodnessReport(True, w)


def is_N_good(G: Multigraph, weights: WeightConstants = DEFAULT_WEIGHTS, caps: Caps = DEFAULT_CAPS) -> GoodnessReport:
    """w(G) >= 0, G not in N, and every nontrivial quotient outside N u W*."""
    tag = classify_family(G)
    if tag.in_N:
        w, wit = min_weight(G, weights, caps)
        return GoodnessReport(False, w, "member of N", None, tag)
    return _goodness_scan(G, include_trivial_quotient=False, weights=weights, caps=caps)


def is_S_good(G: Multigraph, weights: WeightConstants = DEFAULT_WEIGHTS, caps: Caps = DEFAULT_CAPS) -> GoodnessReport:
    """w(G) >= 0 and every quotient (identity included) outside N u W*."""
    return _goodness_scan(G, include_trivial_quotient=True, weights=weights, caps=caps)


# ======================================================================
# Refinement identity
# ======================================================================


class RefinementIdentity(NamedTuple):
    lhs: int
    rhs: int
    equal: bool


def refinement_identity(
    G: Multigraph,
    P: Partition,
    Q: Sequence[Iterable[int]],
    block_index: int = 0,
    weights: WeightConstants = DEFAULT_WEIGHTS,
) -> RefinementIdentity:
    """Both sides of  w_H(Q) = w_G(Q u P \\ P_1) - w_G(P) + (offset - cut_coeff).

    ``P_1`` is ``P.blocks[block_index]`` and ``H = G[P_1]``; ``Q`` is given in
    original vertex labels and must partition ``P_1`` into at least two blocks.
    """
    P1 = P.blocks[block_index]
    qblocks = [frozenset(b) for b in Q]
    union: set[int] = set()
    for b in qblocks:
        if not b or (b & union):
            raise InvalidInput("Q blocks must be nonempty and disjoint")
        union |= b
    if union != set(P1):
        raise InvalidInput(f"Q must partition block {sorted(P1)}")
    H, vmap = G.induced_subgraph(P1)
    lhs = weight_of_partition(
        H, Partition(({vmap[v] for v in b} for b in qblocks), H.n), weights
    )
    refined = Partition(
        qblocks + [b for i, b in enumerate(P.blocks) if i != block_index], G.n
    )
    rhs = (
        weight_of_partition(G, refined, weights)
        - weight_of_partition(G, P, weights)
        + weights.refinement_constant
    )
    return RefinementIdentity(lhs, rhs, lhs == rhs)


# ======================================================================
# Partition-weight exclusion clauses
# ======================================================================


@dataclass(frozen=True)
class ClauseOutcome:
    """One exclusion clause: premise on (w, P, G), conclusion about G/P."""

    name: str
    premise: bool
    conclusion: bool | None  # None when the premise does not apply

    @property
    def consistent(self) -> bool:
        return (not self.premise) or bool(self.conclusion)


@dataclass(frozen=True)
class BoundCheckReport:
    weight: int
    quotient_family: FamilyTag
    clauses: tuple[ClauseOutcome, ...]

    @property
    def consistent(self) -> bool:
        return all(c.consistent for c in self.clauses)


def partition_bound_check(
    G: Multigraph,
    P: Partition,
    weights: WeightConstants = DEFAULT_WEIGHTS,
) -> BoundCheckReport:
    """Evaluate the five weight-threshold exclusion clauses against reality.

    Each clause pairs a premise (a weight threshold, possibly with a block
    count or connectivity condition) with an exclusion of G/P from N or from
    N u W*; the conclusion is checked by actually contracting and
    classifying, never assumed.
    """
    w = weight_of_partition(G, P, weights)
    tag = classify_family(contract_partition(G, P.blocks).graph)
    not_N = not tag.in_N
    not_both = not tag.in_either
    nine_connected = None

    def nine_ec() -> bool:
        nonlocal nine_connected
        if nine_connected is None:
            nine_connected = edge_connectivity(G)[0] >= 9
        return nine_connected

    clauses = (
        ClauseOutcome("w >= 11 excludes N", w >= 11, not_N if w >= 11 else None),
        ClauseOutcome("w >= 13 excludes N u W*", w >= 13, not_both if w >= 13 else None),
        ClauseOutcome(
            "w >= 4 with t >= 3 excludes N",
            w >= 4 and P.t >= 3,
            not_N if (w >= 4 and P.t >= 3) else None,
        ),
        ClauseOutcome(
            "w >= 6 with t >= 3 excludes N u W*",
            w >= 6 and P.t >= 3,
            not_both if (w >= 6 and P.t >= 3) else None,
        ),
        ClauseOutcome(
            "w >= 6 with G 9-edge-connected excludes N u W*",
            w >= 6 and nine_ec(),
            not_both if (w >= 6 and nine_ec()) else None,
        ),
    )
    return BoundCheckReport(w, tag, clauses)


# ======================================================================
# Gap thresholds by partition type
# ======================================================================

#: (k1, k2, threshold): a partition of type (k1+, k2+, *) must weigh at least
#: the threshold on any graph with no N-good induced block (witness extraction
#: in the reduction engine leans on these).
GAP_THRESHOLDS: tuple[tuple[int, int, int], ...] = (
    (2, 1, 9),
    (3, 1, 16),
    (2, 2, 18),
    (4, 1, 20),
    (3, 2, 25),
    (3, 3, 32),
)


def gap_threshold(P: Partition) -> int | None:
    """Strongest applicable weight threshold for P's type, or None (all singletons)."""
    s = P.sizes
    k1, k2 = s[0], s[1]
    best = None
    for a, b, theta in GAP_THRESHOLDS:
        if k1 >= a and k2 >= b and (best is None or theta > best):
            best = theta
    return best
