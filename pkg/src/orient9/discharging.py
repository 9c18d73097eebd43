"""Exact-rational face charging for embedded plane multigraphs.

Every face starts with charge ``d(f)`` and three redistribution rules move
charge between weakly adjacent faces (faces joined by a chain whose internal
faces are all 2-faces).  The engine then checks whether every face retains at
least ``46/21``.  All arithmetic is integer arithmetic over the fixed
denominator 210 = lcm(21, 42, 105), so every rule amount is a whole number of
units and comparisons are exact.

Rules (amounts in parentheses are in 1/210 units):

* Rule A   -- each face of degree >= 3 gives 2/21 (20) to each weakly
  adjacent 2-face.
* Rule B-Q -- each 4-face whose corner multiplicities sum to at most 22
  gives 1/21 (10) to each weakly adjacent 3-face.
* Rule B-T -- each 3-face whose corner multiplicities sum to at most 11
  gives 1/42 (5) to each weakly adjacent 3-face, once per crossed parallel
  class of multiplicity >= 4.
* Rule C   -- each face of degree >= 5 gives 9/105 (18) to each weakly
  adjacent 3-face and 4-face.

Transfers are recorded per (giver, receiver, crossed parallel class).  A
chain of 2-faces can never change parallel class (a 2-face has exactly two
boundary edges and they join the same vertex pair), so each boundary edge of
a face leads to at most one non-2-face across its class; the per-class
bookkeeping therefore coincides with counting one potential gift per side of
the giving face.

No face is privileged: the unbounded face of a drawing is just one of the
rotation-system orbits and is charged like any other face.

Degenerate boundaries: a 3-, 4- or 5-face whose boundary walk revisits a
vertex is not the inner face of any triangle/quadrilateral/pentagon pattern.
Such faces still give and receive under Rules A and C, but Rule B (which is
conditioned on the pattern) skips them and the ledger records a note.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .configurations import ConfigMatch, detect_config
from .embedding import PlaneEmbedding
from .errors import FalsificationEvent, InvalidInput
from .graph import Multigraph

__all__ = [
    "CHARGE_DENOMINATOR",
    "TARGET_UNITS",
    "TARGET_CHARGE",
    "FaceClass",
    "classify_faces",
    "weak_adjacency_map",
    "weakly_adjacent",
    "euler_density_check",
    "Transfer",
    "ChargeLedger",
    "apply_rules",
    "DeficiencyReport",
    "verdict",
    "CaseIdentity",
    "CaseTableReport",
    "case_table_verify",
    "T444Report",
    "t444_exclusion_check",
]

#: All charge arithmetic happens in integer multiples of 1/210.
CHARGE_DENOMINATOR = 210

#: Rule amounts in 1/210 units.
_RULE_A_UNITS = 20  # 2/21
_RULE_BQ_UNITS = 10  # 1/21
_RULE_BT_UNITS = 5  # 1/42
_RULE_C_UNITS = 18  # 9/105

#: Every face must end with at least 46/21 = 460/210.
TARGET_UNITS = 460
TARGET_CHARGE = Fraction(46, 21)

#: Eligibility thresholds for Rule B, on the sum of corner multiplicities.
_QUAD_GIVE_MAX_SIGMA = 22
_TRI_GIVE_MAX_SIGMA = 11
_BT_MIN_MULTIPLICITY = 4


# ======================================================================
# Face classification
# ======================================================================


_KIND_BY_DEGREE = {3: "triangle", 4: "quad", 5: "pentagon"}


@dataclass(frozen=True)
class FaceClass:
    """What a face is, for rule eligibility.

    ``kind`` is one of ``"2-face"`` (a digon), ``"triangle"`` / ``"quad"`` /
    ``"pentagon"`` (inner face of a multi-triangle, multi-quadrilateral or
    multi-pentagon: the boundary visits that many distinct vertices),
    ``"big"`` (degree >= 6) or ``"irregular"`` (degree 3..5 but the boundary
    walk revisits a vertex, so no pattern classification applies).

    ``params`` lists the multiplicity of each boundary parallel class in walk
    order -- the maximal multiplicities present in the graph, not the two
    edges of some sub-pattern.
    """

    index: int
    degree: int
    kind: str
    corners: tuple[int, ...] | None = None
    params: tuple[int, ...] | None = None
    note: str = ""

    @property
    def sigma(self) -> int | None:
        """Sum of boundary-class multiplicities (None when unclassified)."""
        if self.params is None:
            return None
        return sum(self.params)


def classify_faces(G: Multigraph, emb: PlaneEmbedding) -> tuple[FaceClass, ...]:
    """Classify every face of the embedding for rule eligibility."""
    if emb.graph != G:
        raise InvalidInput("embedding does not belong to this graph")
    out: list[FaceClass] = []
    for i, face in enumerate(emb.faces):
        d = face.degree
        tails = emb.face_tails(face)
        if d == 2:
            u, v = sorted(tails)
            out.append(
                FaceClass(i, 2, "2-face", corners=(u, v), params=(G.mu(u, v),))
            )
        elif d in _KIND_BY_DEGREE:
            if len(set(tails)) == d:
                params = tuple(G.mu(*p) for p in emb.face_pairs(face))
                out.append(
                    FaceClass(i, d, _KIND_BY_DEGREE[d], corners=tails, params=params)
                )
            else:
                out.append(
                    FaceClass(
                        i,
                        d,
                        "irregular",
                        note=(
                            f"boundary walk of face {i} revisits a vertex; "
                            "pattern classification skipped"
                        ),
                    )
                )
        else:
            out.append(FaceClass(i, d, "big"))
    return tuple(out)


# ======================================================================
# Weak adjacency
# ======================================================================


def _norm_pair(pair: tuple[int, int]) -> tuple[int, int]:
    u, v = pair
    return (u, v) if u <= v else (v, u)


def weak_adjacency_map(
    emb: PlaneEmbedding,
) -> tuple[dict[int, set[tuple[int, int]]], ...]:
    """For each face, the weakly adjacent faces and the classes crossed.

    Entry ``i`` maps each face ``j`` weakly adjacent to face ``i`` to the set
    of parallel classes (vertex pairs) whose 2-face chains realise the
    adjacency (a shared edge counts as a chain with no internal faces).  A
    face is never recorded as weakly adjacent to itself.
    """
    G = emb.graph
    faces = emb.faces
    deg = [f.degree for f in faces]
    result: tuple[dict[int, set[tuple[int, int]]], ...] = tuple(
        {} for _ in faces
    )
    for fi, face in enumerate(faces):
        reach = result[fi]
        for end in face.ends:
            eid = end // 2
            cls = _norm_pair(G.edge(eid).pair)
            gi = emb.face_of_end(end ^ 1)
            if gi == fi:
                continue  # bridge: both sides are this face
            if deg[gi] != 2:
                reach.setdefault(gi, set()).add(cls)
                continue
            # Flood through the digon chain.  Each digon has exactly two
            # boundary edges, both in class ``cls``, so the chain is a path
            # (or cycle) and stays inside one parallel class.
            stack = [gi]
            visited = {gi}
            while stack:
                di = stack.pop()
                reach.setdefault(di, set()).add(cls)
                for dend in faces[di].ends:
                    hj = emb.face_of_end(dend ^ 1)
                    if hj == fi or hj in visited:
                        continue
                    if deg[hj] == 2:
                        visited.add(hj)
                        stack.append(hj)
                    else:
                        reach.setdefault(hj, set()).add(cls)
    return result


def weakly_adjacent(emb: PlaneEmbedding, f: int, g: int) -> bool:
    """True iff faces ``f`` and ``g`` are joined by a chain of 2-faces.

    The chain may be empty (faces sharing an edge are weakly adjacent).  A
    face is not considered weakly adjacent to itself.
    """
    n_f = emb.num_faces()
    for idx in (f, g):
        if not 0 <= idx < n_f:
            raise InvalidInput(f"face index {idx} out of range (0..{n_f - 1})")
    if f == g:
        return False
    return g in weak_adjacency_map(emb)[f]


# ======================================================================
# Density bookkeeping
# ======================================================================


def euler_density_check(G: Multigraph, emb: PlaneEmbedding) -> bool:
    """Check the face-count inequality 2e <= (2 + 4/21)f - 8/21 exactly.

    Requires the handshake identity sum d(f) = 2e and Euler's relation
    v - e + f = 2 to hold (these are structural invariants of a valid
    embedding of a connected graph; their failure is raised, not returned).
    Returns False when the density hypothesis 2e >= 23v - 42 fails -- the
    inequality is derived from it -- and True when both it and the
    inequality hold.  All comparisons are integer-exact (the inequality is
    checked as 42e <= 46f - 8).
    """
    if emb.graph != G:
        raise InvalidInput("embedding does not belong to this graph")
    if not G.is_connected():
        raise InvalidInput("density bookkeeping requires a connected graph")
    e = G.num_edges()
    f = emb.num_faces()
    handshake = sum(face.degree for face in emb.faces)
    if handshake != 2 * e:
        raise FalsificationEvent(
            f"face degrees sum to {handshake}, expected 2e = {2 * e}"
        )
    if G.n - e + f != 2:
        raise FalsificationEvent(
            f"Euler relation violated: v - e + f = {G.n - e + f}, expected 2"
        )
    if 2 * e < 23 * G.n - 42:
        return False
    if 42 * e > 46 * f - 8:
        # Algebraically impossible once the two identities above and the
        # density hypothesis hold; kept as a falsification trap.
        raise FalsificationEvent(
            f"density inequality failed: 42e = {42 * e} > 46f - 8 = {46 * f - 8}"
        )
    return True


# ======================================================================
# Rule application
# ======================================================================


class Transfer(NamedTuple):
    """One charge movement: ``giver`` pays ``units``/210 to ``receiver``.

    ``rule`` is one of ``"A"``, ``"B-Q"``, ``"B-T"``, ``"C"``; ``cls`` is the
    parallel class (vertex pair) crossed by the 2-face chain realising the
    weak adjacency.
    """

    rule: str
    giver: int
    receiver: int
    cls: tuple[int, int]
    units: int

    @property
    def amount(self) -> Fraction:
        return Fraction(self.units, CHARGE_DENOMINATOR)


@dataclass(frozen=True)
class ChargeLedger:
    """Initial charges, the full transfer log, and final charges.

    Charges are stored in integer units of 1/210.  The ledger is immutable
    once built; ``apply_rules`` is the only constructor used in practice.
    """

    graph: Multigraph
    embedding: PlaneEmbedding
    classes: tuple[FaceClass, ...]
    initial_units: tuple[int, ...]
    transfers: tuple[Transfer, ...]
    final_units: tuple[int, ...]
    notes: tuple[str, ...] = ()

    @property
    def num_faces(self) -> int:
        return len(self.initial_units)

    def initial_charge(self, face: int) -> Fraction:
        return Fraction(self.initial_units[face], CHARGE_DENOMINATOR)

    def charge(self, face: int) -> Fraction:
        """Final charge of a face, as an exact rational."""
        return Fraction(self.final_units[face], CHARGE_DENOMINATOR)

    @property
    def conserved(self) -> bool:
        """Every transfer debits and credits equally, so totals must agree."""
        return sum(self.final_units) == sum(self.initial_units)

    def deficient_faces(self) -> tuple[int, ...]:
        """Faces whose final charge falls below 46/21."""
        return tuple(
            i for i, u in enumerate(self.final_units) if u < TARGET_UNITS
        )

    def transfers_csv(self) -> str:
        """Transfer log as CSV (from_face, to_face, rule, amount)."""
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["from_face", "to_face", "rule", "class", "amount"])
        for t in self.transfers:
            writer.writerow(
                [t.giver, t.receiver, t.rule, f"{t.cls[0]}-{t.cls[1]}", str(t.amount)]
            )
        return buf.getvalue()


def _rule_transfers(
    G: Multigraph,
    classes: tuple[FaceClass, ...],
    weak: tuple[dict[int, set[tuple[int, int]]], ...],
) -> list[Transfer]:
    """All transfers mandated by Rules A, B and C, from classification only.

    No transfer depends on another transfer, so the outcome is independent of
    application order by construction.
    """
    transfers: list[Transfer] = []
    for fc in classes:
        fi = fc.index
        d = fc.degree
        if d < 3:
            continue
        quad_gives = (
            fc.kind == "quad" and fc.sigma is not None and fc.sigma <= _QUAD_GIVE_MAX_SIGMA
        )
        tri_gives = (
            fc.kind == "triangle"
            and fc.sigma is not None
            and fc.sigma <= _TRI_GIVE_MAX_SIGMA
        )
        for gj, crossed in sorted(weak[fi].items()):
            gd = classes[gj].degree
            if gd == 2:
                for cls in sorted(crossed):
                    transfers.append(Transfer("A", fi, gj, cls, _RULE_A_UNITS))
            elif gd == 3:
                if quad_gives:
                    for cls in sorted(crossed):
                        transfers.append(
                            Transfer("B-Q", fi, gj, cls, _RULE_BQ_UNITS)
                        )
                if tri_gives:
                    for cls in sorted(crossed):
                        if G.mu(*cls) >= _BT_MIN_MULTIPLICITY:
                            transfers.append(
                                Transfer("B-T", fi, gj, cls, _RULE_BT_UNITS)
                            )
                if d >= 5:
                    for cls in sorted(crossed):
                        transfers.append(Transfer("C", fi, gj, cls, _RULE_C_UNITS))
            elif gd == 4 and d >= 5:
                for cls in sorted(crossed):
                    transfers.append(Transfer("C", fi, gj, cls, _RULE_C_UNITS))
    return transfers


def apply_rules(G: Multigraph, emb: PlaneEmbedding) -> ChargeLedger:
    """Run the three discharging rules and return the complete ledger.

    Raises:
        InvalidInput: if the embedding does not belong to ``G``.
        FalsificationEvent: if the resulting ledger fails charge
            conservation (an internal invariant; every transfer debits and
            credits the same amount).
    """
    if emb.graph != G:
        raise InvalidInput("embedding does not belong to this graph")
    classes = classify_faces(G, emb)
    weak = weak_adjacency_map(emb)
    initial = tuple(CHARGE_DENOMINATOR * fc.degree for fc in classes)
    transfers = _rule_transfers(G, classes, weak)
    final = list(initial)
    for t in transfers:
        final[t.giver] -= t.units
        final[t.receiver] += t.units
    notes = tuple(fc.note for fc in classes if fc.note)
    ledger = ChargeLedger(
        graph=G,
        embedding=emb,
        classes=classes,
        initial_units=initial,
        transfers=tuple(transfers),
        final_units=tuple(final),
        notes=notes,
    )
    if not ledger.conserved:
        raise FalsificationEvent(
            "charge conservation violated: "
            f"initial {sum(initial)} units, final {sum(ledger.final_units)} units"
        )
    if sum(initial) != CHARGE_DENOMINATOR * 2 * G.num_edges():
        raise FalsificationEvent(
            "initial charge does not equal 2e: "
            f"{sum(initial)} units vs {CHARGE_DENOMINATOR * 2 * G.num_edges()}"
        )
    return ledger


# ======================================================================
# Verdict
# ======================================================================


@dataclass(frozen=True)
class DeficiencyReport:
    """A face that finished below 46/21, with nearby catalog matches.

    ``matches`` lists detected reducible-configuration instances whose
    vertices touch the face's boundary -- when discharging fails, one of
    these should explain why (a falsification aid, not a proof step).
    """

    face: int
    charge: Fraction
    threshold: Fraction
    face_class: FaceClass
    matches: tuple[ConfigMatch, ...]

    @property
    def deficit(self) -> Fraction:
        return self.threshold - self.charge


def verdict(ledger: ChargeLedger) -> list[DeficiencyReport]:
    """Faces below the 46/21 target, each annotated with catalog matches.

    An empty list means discharging succeeds: every face retains at least
    46/21, so 2e(G) = sum of face charges >= (46/21) f(G), contradicting the
    density inequality -- the intended use is that a non-empty result points
    at the configuration that should have been reduced first.
    """
    deficient = ledger.deficient_faces()
    if not deficient:
        return []
    all_matches = detect_config(ledger.graph, "all")
    reports = []
    for fi in deficient:
        face = ledger.embedding.faces[fi]
        boundary = set(ledger.embedding.face_tails(face))
        nearby = tuple(
            m for m in all_matches if boundary.intersection(m.assignment)
        )
        reports.append(
            DeficiencyReport(
                face=fi,
                charge=ledger.charge(fi),
                threshold=TARGET_CHARGE,
                face_class=ledger.classes[fi],
                matches=nearby,
            )
        )
    return reports


# ======================================================================
# Case-table identities
# ======================================================================


class CaseIdentity(NamedTuple):
    """One evaluated line of the final-charge case analysis."""

    label: str
    lhs: Fraction
    relation: str  # "==", ">=", ">", "<", "<="
    rhs: Fraction
    ok: bool


@dataclass(frozen=True)
class CaseTableReport:
    entries: tuple[CaseIdentity, ...]

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.entries)

    def failures(self) -> tuple[CaseIdentity, ...]:
        return tuple(e for e in self.entries if not e.ok)

    def __bool__(self) -> bool:
        return self.ok


_RELATIONS = {
    "==": lambda a, b: a == b,
    ">=": lambda a, b: a >= b,
    ">": lambda a, b: a > b,
    "<=": lambda a, b: a <= b,
    "<": lambda a, b: a < b,
}


def _identity(label: str, lhs: Fraction, relation: str, rhs: Fraction) -> CaseIdentity:
    return CaseIdentity(label, lhs, relation, rhs, _RELATIONS[relation](lhs, rhs))


def case_table_verify() -> CaseTableReport:
    """Evaluate every line of the final-charge case analysis exactly.

    Pure arithmetic: no graph input.  Each entry records the closed-form
    final charge of one face case (worst case over its scenario) and the
    relation it must satisfy against the 46/21 target.  A failing entry
    means the rule amounts and the case analysis have drifted apart, which
    would invalidate the charging argument -- hence the zero-tolerance exact
    rationals.
    """
    A = Fraction(2, 21)
    BQ = Fraction(1, 21)
    BT = Fraction(1, 42)
    C = Fraction(9, 105)
    target = TARGET_CHARGE
    entries: list[CaseIdentity] = []

    # Unit grid: every rule amount is a whole number of 1/210 units.
    entries.append(
        _identity(
            "rule amounts on the 1/210 grid",
            Fraction(
                sum(
                    (
                        A != Fraction(_RULE_A_UNITS, CHARGE_DENOMINATOR),
                        BQ != Fraction(_RULE_BQ_UNITS, CHARGE_DENOMINATOR),
                        BT != Fraction(_RULE_BT_UNITS, CHARGE_DENOMINATOR),
                        C != Fraction(_RULE_C_UNITS, CHARGE_DENOMINATOR),
                        target != Fraction(TARGET_UNITS, CHARGE_DENOMINATOR),
                    )
                )
            ),
            "==",
            Fraction(0),
        )
    )

    # 2-face: receives 2/21 from the 3+-face at each end of its digon stack.
    entries.append(_identity("2-face: 2 + 2*(2/21)", 2 + 2 * A, "==", target))

    # 6+-face: gives at most d(f) * max{6*(2/21), 5*(2/21) + 9/105} = (12/21) d(f)
    # (per side: either six 2-faces, or five 2-faces and one 3-/4-face).
    per_side = max(6 * A, 5 * A + C)
    entries.append(
        _identity("6+-face: per-side giving max", per_side, "==", Fraction(12, 21))
    )
    entries.append(
        _identity(
            "6+-face: d - (12/21) d >= (9/21) d > 46/21 at d = 6",
            6 - per_side * 6,
            ">",
            target,
        )
    )

    # 5-face (pentagon with corner sum <= 30): at most 25 weakly adjacent
    # 2-faces and 5 weakly adjacent 3-/4-faces.
    entries.append(
        _identity(
            "5-face, sigma <= 30: 5 - 25*(2/21) - 5*(9/105)",
            5 - 25 * A - 5 * C,
            "==",
            target,
        )
    )

    # 4-faces, by corner multiplicity sum.
    for sigma in range(4, 22):
        lhs = 4 - (sigma - 4) * A - 4 * BQ
        entries.append(
            _identity(
                f"4-face, sigma = {sigma}: equals (88 - 2 sigma)/21",
                lhs,
                "==",
                Fraction(88 - 2 * sigma, 21),
            )
        )
    entries.append(
        _identity(
            "4-face, sigma <= 21: (88 - 2 sigma)/21 >= 46/21 at sigma = 21",
            Fraction(88 - 2 * 21, 21),
            ">=",
            target,
        )
    )
    entries.append(
        _identity(
            "4-face, sigma = 22: 4 - 18*(2/21) - 2*(1/21)",
            4 - 18 * A - 2 * BQ,
            "==",
            target,
        )
    )
    entries.append(
        _identity(
            "4-face, sigma = 23: 4 - 19*(2/21)", 4 - 19 * A, "==", target
        )
    )
    entries.append(
        _identity(
            "4-face, sigma = 24: 4 - 20*(2/21) + 4*(9/105)",
            4 - 20 * A + 4 * C,
            "==",
            Fraction(256, 105),
        )
    )
    entries.append(
        _identity(
            "4-face, sigma = 24: 256/105 > 46/21", Fraction(256, 105), ">", target
        )
    )

    # 3-faces, by corner multiplicity sum.  A giving 3-face (sigma <= 11) has
    # at most two sides of multiplicity >= 4, so it pays at most 2*(1/42).
    for sigma in range(3, 12):
        lhs = 3 - (sigma - 3) * A - 2 * BT
        entries.append(
            _identity(
                f"3-face, sigma = {sigma}: equals (68 - 2 sigma)/21",
                lhs,
                "==",
                Fraction(68 - 2 * sigma, 21),
            )
        )
    entries.append(
        _identity(
            "3-face, sigma <= 11: (68 - 2 sigma)/21 >= 46/21 at sigma = 11",
            Fraction(68 - 2 * 11, 21),
            ">=",
            target,
        )
    )
    entries.append(
        _identity(
            "3-face of a (1,5,6) triangle: 3 - 9*(2/21) + 9/105",
            3 - 9 * A + C,
            "==",
            Fraction(234, 105),
        )
    )
    entries.append(
        _identity(
            "3-face of a (1,6,6) triangle: 3 - 10*(2/21) + 2*(9/105)",
            3 - 10 * A + 2 * C,
            "==",
            Fraction(233, 105),
        )
    )
    entries.append(
        _identity(
            "3-face of a (2,5,5) triangle: 3 - 9*(2/21) + 2*min{1/21, 9/105}",
            3 - 9 * A + 2 * min(BQ, C),
            "==",
            Fraction(235, 105),
        )
    )
    for label, value in (
        ("(1,5,6)", Fraction(234, 105)),
        ("(1,6,6)", Fraction(233, 105)),
        ("(2,5,5)", Fraction(235, 105)),
    ):
        entries.append(
            _identity(f"3-face of a {label} triangle clears 46/21", value, ">", target)
        )
    entries.append(
        _identity(
            "3-face of a (4,4,4) triangle: 3 - 9*(2/21) + min{1/21, 9/105, 3/42}",
            3 - 9 * A + min(BQ, C, 3 * BT),
            "==",
            target,
        )
    )

    # Preamble bounds: with the heaviest configurations excluded, triangle
    # corner sums stay <= 13 (max over (1,6,6), (2,5,5), (4,4,4) readings)
    # and quadrilateral corner sums stay <= 24.
    entries.append(
        _identity(
            "triangle corner sum bound: max{1+6+6, 2+5+5, 4+4+4} = 13",
            Fraction(max(1 + 6 + 6, 2 + 5 + 5, 4 + 4 + 4)),
            "==",
            Fraction(13),
        )
    )
    entries.append(
        _identity(
            "quadrilateral corner sum bound: 4 * 6 = 24",
            Fraction(4 * 6),
            "==",
            Fraction(24),
        )
    )

    # Global margin: initial total (2 + 4/21) f - 8/21 sits strictly below
    # the target total (46/21) f, because 2 + 4/21 = 46/21 exactly.
    entries.append(
        _identity(
            "density coefficient: 2 + 4/21 = 46/21",
            2 + Fraction(4, 21),
            "==",
            target,
        )
    )
    entries.append(
        _identity("strict margin: -8/21 < 0", Fraction(-8, 21), "<", Fraction(0))
    )

    return CaseTableReport(entries=tuple(entries))


# ======================================================================
# Triangle-exclusion diagnostic
# ======================================================================


@dataclass(frozen=True)
class T444Report:
    """Outcome of the (4,4,4)-triangle neighbour-exclusion check.

    ``ok`` is True when the weakly adjacent 3-faces of the given face are
    pairwise non-weakly-adjacent.  Each violation carries the two faces, the
    crossed parallel class, and a degree-arithmetic note; ``matches`` lists
    the forbidden configurations that must then be present.
    """

    ok: bool
    face: int
    adjacent_triangles: tuple[int, ...]
    violations: tuple[tuple[int, int, str], ...]
    matches: tuple[ConfigMatch, ...]

    def __bool__(self) -> bool:
        return self.ok


def t444_exclusion_check(
    G: Multigraph, emb: PlaneEmbedding, face: int
) -> T444Report:
    """Check that the 3-face neighbours of a (4,4,4) triangle face repel.

    ``face`` must be a 3-face whose three boundary classes all have
    multiplicity exactly 4 (otherwise InvalidInput).  The claim being
    verified: the 3-faces weakly adjacent to it are pairwise non-weakly-
    adjacent.  When two of them are weakly adjacent across a class ``x-w``
    with ``x`` a corner of the triangle, then mu(x, w) <= 5 forces
    d(x) <= 5 + 4 + 4 = 13 < 14, and mu(x, w) >= 6 forces a forbidden
    configuration; the report's note spells out which branch applies and
    ``matches`` carries any detected (3,3,5)-triangle or rerouted
    (1,1,7)-triangle instances.
    """
    classes = classify_faces(G, emb)
    if not 0 <= face < len(classes):
        raise InvalidInput(
            f"face index {face} out of range (0..{len(classes) - 1})"
        )
    fc = classes[face]
    if fc.kind != "triangle" or fc.params != (4, 4, 4):
        raise InvalidInput(
            f"face {face} is not the inner face of a (4,4,4) triangle "
            f"(kind {fc.kind!r}, params {fc.params})"
        )
    corners = set(fc.corners or ())
    weak = weak_adjacency_map(emb)
    triangles = tuple(
        sorted(g for g in weak[face] if classes[g].degree == 3)
    )
    violations: list[tuple[int, int, str]] = []
    for a_pos, gi in enumerate(triangles):
        for gj in triangles[a_pos + 1 :]:
            crossed = weak[gi].get(gj)
            if not crossed:
                continue
            for cls in sorted(crossed):
                u, v = cls
                shared = [p for p in cls if p in corners]
                if shared:
                    x = shared[0]
                    w = v if x == u else u
                    m = G.mu(x, w)
                    if m <= 5:
                        note = (
                            f"weakly adjacent across class {x}-{w} with "
                            f"mu = {m} <= 5, so d({x}) = {G.degree(x)} <= "
                            "5 + 4 + 4 = 13 < 14: the minimum-degree bound fails"
                        )
                    else:
                        note = (
                            f"weakly adjacent across class {x}-{w} with "
                            f"mu = {m} >= 6: a (3,3,5) triangle or rerouted "
                            "(1,1,7) triangle must be present"
                        )
                else:
                    note = (
                        f"weakly adjacent across class {u}-{v}, which avoids "
                        "the triangle's corners"
                    )
                violations.append((gi, gj, note))
    matches: tuple[ConfigMatch, ...] = ()
    if violations:
        matches = tuple(detect_config(G, "T_{3,3,5}")) + tuple(
            detect_config(G, "T^o_{1,1,7}")
        )
    return T444Report(
        ok=not violations,
        face=face,
        adjacent_triangles=triangles,
        violations=tuple(violations),
        matches=matches,
    )
