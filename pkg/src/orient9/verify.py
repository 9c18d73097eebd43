"""The twelve-item verification suite behind ``orient9 verify-paper``.

Each item exercises one brute-forceable fact end to end and reports exact
pass/fail with a one-line detail.  Scales:

* ``quick`` -- every item runs, but the two long-budget computations (the
  four-vertex slow-mode SC_16 instance in item 3, the 106-vertex gadget
  exhaustion in item 6) are replaced by their nearest affordable relatives.
* ``full``  -- the complete workload, including both long-budget

Determinism: every randomized item draws from a ``random.Random`` seeded
with the item number, so reports are stable across runs and platforms.
"""

from __future__ import annotations

import dataclasses
import itertools
import random
import time
from dataclasses import dataclass
from typing import Callable

from ._caps import DEFAULT_CAPS, Caps
from .configurations import CATALOG, detect_config
from .discharging import apply_rules, case_table_verify, euler_density_check
from .embedding import PlaneEmbedding
from .errors import InvalidInput
from .families import alpha_k2, quad, triangle
from .flows import (
    dual_flow_to_hom,
    flow_to_orientation,
    hom_to_dual_flow,
    orientation_to_flow,
)
from .graph import Multigraph, contract_subset, odd_edge_connectivity, odd_girth
from .homomorphism import check_hom, find_homomorphism, gadget
from .orientations import (
    ZkBoundary,
    check_zk_orientation,
    find_zk_orientation,
    is_in_SC,
    is_strongly_zk_connected,
    is_weakly_contractible,
    modular_orientation,
)
from .partitions import min_weight, refinement_identity
from .randgen import (
    random_embedded,
    random_four_vertex,
    random_heavy_cycle,
    random_multigraph,
    random_partition,
    random_signed,
)
from .reduction import SCALED_SOLVE, solve_modular_9, zhang_split
from .signedgraphs import signed_flow_pipeline, verify_signed_flow

__all__ = ["ItemReport", "SuiteReport", "run_verify_paper", "ITEM_IDS"]


@dataclass(frozen=True)
class ItemReport:
    item_id: str
    label: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{self.item_id:4s} {status}  {self.seconds:7.2f}s  {self.label}: {self.detail}"


@dataclass(frozen=True)
class SuiteReport:
    scale: str
    items: tuple[ItemReport, ...]

    @property
    def ok(self) -> bool:
        return all(item.passed for item in self.items)

    def format_lines(self) -> list[str]:
        lines = [item.line() for item in self.items]
        verdictline = "all items passed" if self.ok else "FAILURES: " + ", ".join(
            i.item_id for i in self.items if not i.passed
        )
        lines.append(f"suite ({self.scale}): {verdictline}")
        return lines


def _zero9(n: int) -> ZkBoundary:
    return ZkBoundary.zero(9, n)


# ----------------------------------------------------------------------
# Item 1: small families are strongly Z_9-connected
# ----------------------------------------------------------------------


def _triangles(total_lo: int, total_hi: int, min_deg: int):
    for a in range(1, total_hi + 1):
        for b in range(a, total_hi + 1):
            for c in range(b, total_hi + 1):
                s = a + b + c
                if total_lo <= s <= total_hi and a + b >= min_deg:
                    yield a, b, c


def _item1(scale: str, caps: Caps) -> tuple[bool, str]:
    rng = random.Random(1)
    checked = 0
    for alpha in range(8, 13):
        if not is_strongly_zk_connected(alpha_k2(alpha), 9, caps).member:
            return False, f"{alpha}K_2 rejected"
        checked += 1
    tri_count = 0
    for a, b, c in _triangles(16, 18, 8):
        if not is_strongly_zk_connected(triangle(a, b, c), 9, caps).member:
            return False, f"triangle ({a},{b},{c}) rejected"
        tri_count += 1
    samples = 25
    for i in range(samples):
        G = random_four_vertex(rng, edges=25, min_deg=8, max_mu=7)
        if not is_strongly_zk_connected(G, 9, caps).member:
            return False, f"4-vertex sample {i} rejected: {G.multiplicity_multiset()}"
        checked += 1
    return True, (
        f"{checked - samples} stack graphs, {tri_count} triangles, "
        f"{samples} sampled 4-vertex graphs all in SZ_9"
    )


# ----------------------------------------------------------------------
# Item 2: the exceptional family fails SZ_9, with witness boundaries
# ----------------------------------------------------------------------


def _item2(scale: str, caps: Caps) -> tuple[bool, str]:
    rejected = 0
    for alpha in range(1, 8):
        rep = is_strongly_zk_connected(alpha_k2(alpha), 9, caps)
        if rep.member or rep.witness is None:
            return False, f"{alpha}K_2 not rejected with a witness"
        if find_zk_orientation(alpha_k2(alpha), 9, rep.witness, caps) is not None:
            return False, f"witness boundary for {alpha}K_2 is actually achievable"
        rejected += 1
    if find_zk_orientation(alpha_k2(7), 9, _zero9(2), caps) is not None:
        return False, "7K_2 unexpectedly realises the zero boundary"
    tri = 0
    for a, b, c in _triangles(3, 15, 2):
        rep = is_strongly_zk_connected(triangle(a, b, c), 9, caps)
        if rep.member or rep.witness is None:
            return False, f"triangle ({a},{b},{c}) not rejected with a witness"
        tri += 1
    return True, f"{rejected} stacks and {tri} triangles rejected, each with a concrete boundary"


# ----------------------------------------------------------------------
# Item 3: W_16 / SC_16 membership of the heavy families
# ----------------------------------------------------------------------


def _item3(scale: str, caps: Caps) -> tuple[bool, str]:
    if not is_weakly_contractible(alpha_k2(16), 16, caps).member:
        return False, "16K_2 not weakly contractible at k=16"
    for alpha in (17, 18):
        if not is_in_SC(alpha_k2(alpha), 16, caps).member:
            return False, f"{alpha}K_2 not in SC_16"
    todo = list(_triangles(33, 33, 17))
    for a, b, c in todo:
        if not is_in_SC(triangle(a, b, c), 16, caps).member:
            return False, f"triangle ({a},{b},{c}) not in SC_16"
    # The designated four-vertex instance: e = 50, every degree 25, mu <= 9.
    big = Multigraph.from_multiplicities(
        4, {(0, 1): 9, (0, 2): 8, (0, 3): 8, (1, 2): 8, (1, 3): 8, (2, 3): 9}
    )
    slow_caps = dataclasses.replace(caps, slow_mode=True)
    if not is_in_SC(big, 16, slow_caps).member:
        return False, "designated 4-vertex e=50 instance not in SC_16"
    return True, (
        f"16K_2 in W_16; 17K_2, 18K_2 in SC_16; {len(todo)} heavy triangles in "
        "SC_16; designated 4-vertex e=50 instance in SC_16 (slow mode)"
    )


# ----------------------------------------------------------------------
# Item 4: orientation -> flow -> orientation round trip
# ----------------------------------------------------------------------


def _item4(scale: str, caps: Caps) -> tuple[bool, str]:
    rng = random.Random(4)
    want = 100
    done = 0
    attempts = 0
    while done < want and attempts < 40 * want:
        attempts += 1
        G = random_multigraph(rng, 6, 20)
        D = modular_orientation(G, 9, caps)
        if D is None:
            continue
        flow = orientation_to_flow(G, D, 4)
        ok, problems = flow.verify(G)
        if not ok:
            return False, f"flow verification failed: {problems[0]}"
        D2 = flow_to_orientation(G, flow, 4)
        if not check_zk_orientation(G, D2, 9, _zero9(G.n)):
            return False, "recovered orientation lost the zero boundary"
        done += 1
    if done < want:
        return False, f"only {done} of {want} instances admitted a modular 9-orientation"
    return True, f"{want} round trips preserved the zero-boundary property"


# ----------------------------------------------------------------------
# Item 5: homomorphism <-> dual-flow duality
# ----------------------------------------------------------------------


def _item5(scale: str, caps: Caps) -> tuple[bool, str]:
    rng = random.Random(5)
    want = 50
    done = 0
    attempts = 0
    while done < want and attempts < 60 * want:
        attempts += 1
        emb = random_embedded(
            rng, start_cycle=rng.choice((4, 6, 8)), steps=rng.randint(3, 9)
        )
        G = emb.graph
        res = find_homomorphism(G, 4, caps)
        if res.status != "found":
            continue
        dres, flow = hom_to_dual_flow(G, emb, res.mapping, 4)
        if (flow.p, flow.q) != (9, 4):
            return False, f"unexpected flow parameters {(flow.p, flow.q)}"
        ok, problems = flow.verify(dres.dual_graph)
        if not ok:
            return False, f"dual flow invalid: {problems[0]}"
        if any(abs(v) != 4 for v in flow.values.values()):
            return False, "dual flow value off the +-4 pattern"
        phi = dual_flow_to_hom(dres, flow, 4)
        if not check_hom(G, 4, phi):
            return False, "recovered vertex map is not a homomorphism"
        done += 1
    if done < want:
        return False, f"only {done} of {want} embedded instances had a homomorphism"
    return True, f"{want} duality round trips verified ((p,q)=(9,4), values +-4)"


# ----------------------------------------------------------------------
# Item 6: the tightness gadgets have no homomorphism
# ----------------------------------------------------------------------


def _item6(scale: str, caps: Caps) -> tuple[bool, str]:
    ks = (1, 2, 3) if scale == "quick" else (1, 2, 3, 4)
    details = []
    for k in ks:
        G, _ = gadget(k)
        og, _cycle = odd_girth(G)
        if og != 4 * k - 1:
            return False, f"gadget({k}) has odd girth {og}, expected {4 * k - 1}"
        res = find_homomorphism(G, k, caps)
        if res.status != "none":
            return False, f"gadget({k}) search ended with status {res.status!r}"
        details.append(f"k={k}: v={G.n}, none in {res.nodes} nodes")
    return True, "; ".join(details)


# ----------------------------------------------------------------------
# Item 7: refinement identity and weight monotonicity
# ----------------------------------------------------------------------


def _item7(scale: str, caps: Caps) -> tuple[bool, str]:
    rng = random.Random(7)
    triples = 10_000
    done = 0
    attempts = 0
    while done < triples and attempts < 10 * triples:
        attempts += 1
        G = random_multigraph(rng, 6, 18, min_n=3)
        P = random_partition(rng, G.n)
        big = max(range(P.t), key=lambda j: len(P.blocks[j]))
        block = sorted(P.blocks[big])
        if len(block) < 2:
            continue
        cut = rng.randint(1, len(block) - 1)
        Q = [block[:cut], block[cut:]]
        ident = refinement_identity(G, P, Q, block_index=big)
        if not ident.equal:
            return False, f"identity violated on triple {done}: {ident.lhs} != {ident.rhs}"
        done += 1
    if done < triples:
        return False, f"only {done} of {triples} identity triples generated"
    mono = 1000
    done = 0
    attempts = 0
    while done < mono and attempts < 20 * mono:
        attempts += 1
        G = random_multigraph(rng, 6, 18, min_n=3)
        k = rng.randint(2, G.n - 1)
        S = rng.sample(range(G.n), k)
        H_sub, _ = G.induced_subgraph(S)
        if not H_sub.is_connected():
            continue
        quotient = contract_subset(G, S).graph
        if quotient.n < 2:
            continue
        if min_weight(quotient, caps=caps)[0] < min_weight(G, caps=caps)[0]:
            return False, f"monotonicity violated on pair {done}"
        done += 1
    if done < mono:
        return False, f"only {done} of {mono} contraction pairs generated"
    return True, f"{triples} identity triples and {mono} contraction pairs, all exact"


# ----------------------------------------------------------------------
# Item 8: the splitting lemma always finds a valid index
# ----------------------------------------------------------------------


def _item8(scale: str, caps: Caps) -> tuple[bool, str]:
    rng = random.Random(8)
    want = 10_000
    done = 0
    attempts = 0
    while done < want and attempts < 30 * want:
        attempts += 1
        G = random_multigraph(rng, 6, 16, min_n=3)
        lam, _ = odd_edge_connectivity(G)
        if lam == float("inf") or lam < 3:
            continue
        candidates = [
            v for v in range(G.n) if G.degree(v) >= 3 and G.degree(v) != lam
        ]
        if not candidates:
            continue
        v = rng.choice(candidates)
        try:
            _i, split = zhang_split(G, v)
        except InvalidInput:
            continue
        lam2, _ = odd_edge_connectivity(split)
        if lam2 != lam:
            return False, (
                f"split at v={v} changed odd-edge-connectivity {lam} -> {lam2}"
            )
        done += 1
    if done < want:
        return False, f"only {done} of {want} qualifying instances generated"
    return True, f"{want} splits, odd-edge-connectivity preserved every time"


# ----------------------------------------------------------------------
# Item 9: signed-flow pipeline at (p, q) = (32, 14)
# ----------------------------------------------------------------------


def _item9(scale: str, caps: Caps) -> tuple[bool, str]:
    rng = random.Random(9)
    want = 20
    done = 0
    attempts = 0
    while done < want and attempts < 60 * want:
        attempts += 1
        sg = random_signed(rng, 3, 8)
        cert = signed_flow_pipeline(sg, 8, caps)
        if cert is None:
            continue
        if (cert.flow.p, cert.flow.q) != (32, 14):
            return False, f"unexpected parameters {(cert.flow.p, cert.flow.q)}"
        ok, problems = verify_signed_flow(sg, cert.flow)
        if not ok:
            return False, f"flow fails definition clauses: {problems[0]}"
        if not cert.strict:
            return False, f"tight cut found on attempt {attempts}: {sorted(cert.tight_cut)}"
        done += 1
    if done < want:
        return False, f"only {done} of {want} signed instances admitted the orientation"
    return True, f"{want} signed flows built, verified, and tight-cut-free"


# ----------------------------------------------------------------------
# Item 10: discharging arithmetic
# ----------------------------------------------------------------------


def _item10(scale: str, caps: Caps) -> tuple[bool, str]:
    table = case_table_verify()
    if not table.ok:
        first = table.failures()[0]
        return False, f"case identity failed: {first.label}"
    rng = random.Random(10)
    runs = 100
    for i in range(runs):
        emb = random_embedded(
            rng, start_cycle=rng.choice((3, 4, 5)), steps=rng.randint(2, 10)
        )
        ledger = apply_rules(emb.graph, emb)
        if not ledger.conserved:
            return False, f"charge conservation failed on embedding {i}"
        if sum(ledger.initial_units) != 210 * 2 * emb.graph.num_edges():
            return False, f"initial charge != 2e on embedding {i}"
        expected = 2 * emb.graph.num_edges() >= 23 * emb.graph.n - 42
        if euler_density_check(emb.graph, emb) != expected:
            return False, f"density check inconsistent on embedding {i}"
    return True, (
        f"{len(table.entries)} case identities exact; conservation and density "
        f"checks on {runs} random embeddings"
    )


# ----------------------------------------------------------------------
# Item 11: detector agreement with a brute-force matcher
# ----------------------------------------------------------------------


def _brute_matches(G: Multigraph, pat) -> set[tuple[int, ...]]:
    """Exhaustive injective matcher; independent of the pruned search."""
    thr = pat.threshold_map()
    auts = pat.automorphisms()
    found: set[tuple[int, ...]] = set()
    if pat.n > G.n:
        return found
    for assign in itertools.permutations(range(G.n), pat.n):
        if all(G.mu(assign[a], assign[b]) >= m for (a, b), m in thr.items()):
            found.add(min(tuple(assign[p[i]] for i in range(pat.n)) for p in auts))
    return found


def _random_dense(rng: random.Random) -> Multigraph:
    n = rng.randint(2, 6)
    mult: dict[tuple[int, int], int] = {}
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < 0.55:
                mult[(u, v)] = rng.randint(1, 8)
    if not mult:
        mult[(0, 1)] = rng.randint(1, 8)
    return Multigraph.from_multiplicities(n, mult)


def _item11(scale: str, caps: Caps) -> tuple[bool, str]:
    rng = random.Random(11)
    runs = 1000
    comparisons = 0
    for i in range(runs):
        G = _random_dense(rng)
        for pat in CATALOG:
            got = {m.assignment for m in detect_config(G, pat.name)}
            want = _brute_matches(G, pat)
            comparisons += 1
            if got != want:
                return False, (
                    f"disagreement on instance {i}, pattern {pat.name}: "
                    f"detector {sorted(got)} vs brute force {sorted(want)}"
                )
    return True, f"{runs} instances x {len(CATALOG)} patterns: {comparisons} exact agreements"


# ----------------------------------------------------------------------
# Item 12: scaled-constant solver equals the direct DP
# ----------------------------------------------------------------------


def _item12(scale: str, caps: Caps) -> tuple[bool, str]:
    rng = random.Random(12)
    want = 50
    done = 0
    attempts = 0
    while done < want and attempts < 20 * want:
        attempts += 1
        G = random_heavy_cycle(rng, length_range=(2, 7))
        lam, _ = odd_edge_connectivity(G)
        if lam < 11:
            continue
        D_pipeline = solve_modular_9(G, constants=SCALED_SOLVE, caps=caps)
        D_direct = modular_orientation(G, 5, caps)
        if D_direct is None:
            return False, f"direct DP found no modular 5-orientation on attempt {attempts}"
        if D_pipeline.tails != D_direct.tails:
            return False, f"pipeline and direct DP disagree on attempt {attempts}"
        if not check_zk_orientation(G, D_pipeline, 5, ZkBoundary.zero(5, G.n)):
            return False, "pipeline output fails the independent checker"
        done += 1
    if done < want:
        return False, f"only {done} of {want} qualifying toys generated"
    return True, f"{want} toys: pipeline output identical to the direct DP and verified"


# ----------------------------------------------------------------------
# Runner
# ----------------------------------------------------------------------


_ITEMS: tuple[tuple[str, str, Callable[[str, Caps], tuple[bool, str]]], ...] = (
    ("A1", "heavy small families are strongly Z_9-connected", _item1),
    ("A2", "exceptional family rejected with witness boundaries", _item2),
    ("A3", "W_16 / SC_16 membership of the heavy families", _item3),
    ("A4", "orientation/flow round trip preserves zero boundary", _item4),
    ("A5", "homomorphism/dual-flow duality round trips", _item5),
    ("A6", "tightness gadgets admit no homomorphism", _item6),
    ("A7", "refinement identity and contraction monotonicity", _item7),
    ("A8", "splitting lemma preserves odd-edge-connectivity", _item8),
    ("A9", "signed-flow pipeline at (32, 14) with no tight cut", _item9),
    ("A10", "discharging identities, conservation, density", _item10),
    ("A11", "configuration detector agrees with brute force", _item11),
    ("A12", "scaled-constant solver equals the direct DP", _item12),
)

ITEM_IDS = tuple(item_id for item_id, _, _ in _ITEMS)


def run_verify_paper(
    scale: str = "quick",
    caps: Caps = DEFAULT_CAPS,
    only: set[str] | None = None,
) -> SuiteReport:
    """Run the verification suite and return per-item reports.

    ``scale`` is ``"quick"`` or ``"full"``; ``only`` optionally restricts to a
    subset of item ids (the reports keep suite order).  Items never raise:
    unexpected exceptions are converted into failing reports.
    """
    if scale not in ("quick", "full"):
        raise InvalidInput("scale must be 'quick' or 'full'")
    reports: list[ItemReport] = []
    for item_id, label, fn in _ITEMS:
        if only is not None and item_id not in only:
            continue
        start = time.perf_counter()
        try:
            passed, detail = fn(scale, caps)
        except Exception as exc:  # noqa: BLE001 - suite must report, not crash
            passed, detail = False, f"unexpected {type(exc).__name__}: {exc}"
        reports.append(
            ItemReport(item_id, label, passed, detail, time.perf_counter() - start)
        )
    return SuiteReport(scale=scale, items=tuple(reports))
