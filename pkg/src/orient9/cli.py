"""Command-line front end.

Exit codes follow one convention across all subcommands:

* ``0`` -- verified / found,
* ``1`` -- "none" / false, with a certificate explaining why,
* ``2`` -- bad input, exceeded cap, or a falsification event.

Every certificate is re-checked by the matching independent checker before
it is printed: orientations through :func:`check_zk_orientation`, vertex
maps through :func:`check_hom`, flows through their ``verify`` methods,
partitions by recomputing the weight, configuration matches against the raw
multiplicity thresholds, and ledgers through charge conservation.
Membership verdicts (``sz`` / ``sc``), whose "certificate" is a universally
quantified claim, get a bounded spot check: a few boundaries are re-solved
one at a time and the resulting orientations verified.

Caps come from the ``ORIENT9_CAPS`` environment variable (comma-separated
``name=value`` pairs, e.g. ``ORIENT9_CAPS=cut_vertices=12,slow_mode=1``).
"""

from __future__ import annotations

import argparse
import random
import sys
from dataclasses import dataclass

from ._caps import Caps, caps_from_env
from .discharging import apply_rules, verdict
from .embedding import dual
from .errors import CapExceeded, FalsificationEvent, InvalidInput
from .flows import UnsignedCircularFlow  # noqa: F401  (re-export for scripts)
from .formats import (
    dump_json,
    model_json,
    parse_boundary,
    parse_model_file,
    parse_rotation,
    serialize_model,
    to_dot,
)
from .graph import Multigraph
from .homomorphism import check_hom, find_homomorphism, gadget
from .orientations import (
    Orientation,
    PcBoundary,
    ZkBoundary,
    check_zk_orientation,
    find_sc_orientation,
    find_zk_orientation,
    is_in_SC,
    is_strongly_zk_connected,
    pc_boundaries,
)
from .partitions import (
    classify_family,
    is_N_good,
    is_S_good,
    iter_partitions,
    min_weight,
    weight_of_partition,
)
from .configurations import detect_config
from .reduction import solve_modular_9, theorem_1_12_witness
from .signedgraphs import signed_flow_pipeline, verify_signed_flow
from .verify import run_verify_paper

__all__ = ["main", "Certificate"]

EXIT_OK = 0
EXIT_NONE = 1
EXIT_ERROR = 2


@dataclass(frozen=True)
class Certificate:
    """What a subcommand prints: a kind tag, a payload, and its re-check bit."""

    kind: str  # orientation | hom | flow | partition | match | ledger | suite-report
    payload: dict
    verified: bool

    def as_json(self) -> str:
        return dump_json(
            {"schema": 1, "kind": self.kind, "verified": self.verified, **self.payload}
        )


def _print(args, cert: Certificate, human: list[str]) -> None:
    if args.json:
        sys.stdout.write(cert.as_json())
    else:
        for line in human:
            print(line)


def _load(path: str):
    return parse_model_file(path)


def _need_embedding(model, path: str | None):
    """The embedding for a command that requires one (second file wins)."""
    if path is not None:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_rotation(fh.read(), model.graph, source=path)
    if model.embedding is None:
        raise InvalidInput(
            "this command needs a plane embedding: add 'rot' lines to the model "
            "or pass a rotation file"
        )
    return model.embedding


def _blocks(P) -> list[list[int]]:
    return [sorted(b) for b in P.blocks]


def _orientation_payload(G: Multigraph, D: Orientation) -> list[int]:
    """Tail vertex per edge id, in edge-id order."""
    return [D.tail(G, eid) for eid in sorted(D.tails)]


def _strongly_connected(n: int, arcs: list[tuple[int, int, int]]) -> bool:
    if n <= 1:
        return True
    fwd: list[list[int]] = [[] for _ in range(n)]
    bwd: list[list[int]] = [[] for _ in range(n)]
    for t, h, _ in arcs:
        fwd[t].append(h)
        bwd[h].append(t)

    def reaches_all(adj: list[list[int]]) -> bool:
        seen = {0}
        stack = [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == n

    return reaches_all(fwd) and reaches_all(bwd)


def _check_sc_orientation(G: Multigraph, D: Orientation, m: int, beta: PcBoundary) -> bool:
    net = [0] * G.n
    for t, h, _ in D.arcs(G):
        net[t] += 1
        net[h] -= 1
    if tuple(r % m for r in net) != tuple(beta.residues()):
        return False
    return _strongly_connected(G.n, D.arcs(G))


# ----------------------------------------------------------------------
# Subcommand handlers
# ----------------------------------------------------------------------


def _cmd_weight(args, caps: Caps) -> int:
    G = _load(args.graph).graph
    w, P = min_weight(G, caps=caps)
    if weight_of_partition(G, P) != w:
        raise FalsificationEvent("minimum-weight partition failed the recomputation")
    tag = classify_family(G)

    def goodness(fn):
        try:
            return fn(G, caps=caps).good
        except InvalidInput:
            return None

    payload = {
        "weight": w,
        "partition": _blocks(P),
        "family": {
            "in_N": tag.in_N,
            "in_W_star": tag.in_W_star,
            "shape": tag.shape,
            "params": list(tag.params) if tag.params else None,
        },
        "n_good": goodness(is_N_good),
        "s_good": goodness(is_S_good),
    }
    human = [
        f"w(G) = {w}  at  " + "  |  ".join(str(b) for b in _blocks(P)),
        f"family: in_N={tag.in_N} in_W*={tag.in_W_star}"
        + (f" ({tag.shape} {tag.params})" if tag.shape else ""),
        f"N-good: {payload['n_good']}   S-good: {payload['s_good']}",
    ]
    if args.all_partitions:
        caps.require(G.n, "partition_vertices")
        listing = sorted(
            (weight_of_partition(G, Q), _blocks(Q)) for Q in iter_partitions(G.n)
        )
        payload["all_partitions"] = [{"weight": wq, "blocks": bq} for wq, bq in listing]
        human += [f"  {wq:5d}  " + "  |  ".join(map(str, bq)) for wq, bq in listing]
    _print(args, Certificate("partition", payload, True), human)
    return EXIT_OK


def _spot_check_sz(G: Multigraph, k: int, modulus: int, caps: Caps) -> bool:
    """Re-solve three boundaries one at a time and verify the orientations."""
    rng = random.Random(0)
    if modulus == k:  # odd k: plain zero-sum boundaries
        betas = []
        for _ in range(3):
            vals = [rng.randrange(k) for _ in range(G.n - 1)]
            vals.append(-sum(vals) % k)
            betas.append(ZkBoundary(k, tuple(vals)))
    else:  # even k: parity-compliant boundaries mod 2k
        betas = []
        for i, pb in enumerate(pc_boundaries(G, modulus)):
            if i >= 3:
                break
            betas.append(ZkBoundary(modulus, pb.residues()))
    for beta in betas:
        D = find_zk_orientation(G, modulus, beta, caps)
        if D is None or not check_zk_orientation(G, D, modulus, beta):
            return False
    return True


def _cmd_sz(args, caps: Caps) -> int:
    G = _load(args.graph).graph
    rep = is_strongly_zk_connected(G, args.k, caps)
    if rep.member:
        verified = _spot_check_sz(G, rep.k, rep.modulus, caps)
        if not verified:
            raise FalsificationEvent(
                "membership verdict contradicted by a single-boundary re-solve"
            )
        cert = Certificate(
            "orientation",
            {"member": True, "k": rep.k, "modulus": rep.modulus, "witness": None},
            True,
        )
        _print(args, cert, [f"SZ_{rep.k}: member (boundaries mod {rep.modulus} all achievable)"])
        return EXIT_OK
    witness = list(rep.witness.values)
    # Independent re-check: the single-boundary solver must also come up empty.
    beta = (
        rep.witness
        if isinstance(rep.witness, ZkBoundary)
        else ZkBoundary(rep.modulus, rep.witness.residues())
    )
    if find_zk_orientation(G, rep.modulus, beta, caps) is not None:
        raise FalsificationEvent("witness boundary was achievable after all")
    cert = Certificate(
        "orientation",
        {"member": False, "k": rep.k, "modulus": rep.modulus, "witness": witness},
        True,
    )
    _print(
        args,
        cert,
        [f"SZ_{rep.k}: NOT a member; unreachable boundary {witness} (mod {rep.modulus})"],
    )
    return EXIT_NONE


def _cmd_sc(args, caps: Caps) -> int:
    G = _load(args.graph).graph
    rep = is_in_SC(G, args.k, caps)
    m = rep.modulus
    if rep.member:
        checked = 0
        for pb in pc_boundaries(G, m):
            if checked >= 3:
                break
            D = find_sc_orientation(G, m, pb, caps)
            if D is None or not _check_sc_orientation(G, D, m, pb):
                raise FalsificationEvent(
                    "membership verdict contradicted by a single-boundary re-solve"
                )
            checked += 1
        cert = Certificate(
            "orientation", {"member": True, "k": rep.k, "modulus": m, "witness": None}, True
        )
        _print(args, cert, [f"SC_{rep.k}: member (parity-compliant boundaries mod {m})"])
        return EXIT_OK
    witness = list(rep.witness.values)
    if find_sc_orientation(G, m, rep.witness, caps) is not None:
        raise FalsificationEvent("witness boundary was achievable after all")
    cert = Certificate(
        "orientation", {"member": False, "k": rep.k, "modulus": m, "witness": witness}, True
    )
    _print(args, cert, [f"SC_{rep.k}: NOT a member; unreachable pc-boundary {witness} (mod {m})"])
    return EXIT_NONE


def _cmd_orient(args, caps: Caps) -> int:
    G = _load(args.graph).graph
    m = args.mod
    if args.boundary is not None:
        with open(args.boundary, "r", encoding="utf-8") as fh:
            values = parse_boundary(fh.read(), G.n, source=args.boundary)
        beta = ZkBoundary(m, tuple(values))
    else:
        beta = ZkBoundary.zero(m, G.n)
    D = find_zk_orientation(G, m, beta, caps)
    if D is None:
        cert = Certificate(
            "orientation",
            {"orientation": None, "boundary": list(beta.values), "mod": m},
            True,
        )
        _print(args, cert, [f"no orientation attains boundary {list(beta.values)} (mod {m})"])
        return EXIT_NONE
    if not check_zk_orientation(G, D, m, beta):
        raise FalsificationEvent("found orientation failed the independent checker")
    cert = Certificate(
        "orientation",
        {
            "orientation": _orientation_payload(G, D),
            "boundary": list(beta.values),
            "mod": m,
        },
        True,
    )
    human = [f"  edge {eid}: {D.tail(G, eid)} -> {D.head(G, eid)}" for eid in sorted(D.tails)]
    _print(args, cert, [f"orientation with boundary {list(beta.values)} (mod {m}):"] + human)
    return EXIT_OK


def _cmd_hom(args, caps: Caps) -> int:
    G = _load(args.graph).graph
    res = find_homomorphism(G, args.k, caps)
    if res.status == "found":
        if not check_hom(G, args.k, res.mapping):
            raise FalsificationEvent("reported vertex map failed the adjacency check")
        cert = Certificate(
            "hom", {"hom": list(res.mapping), "status": "found", "k": args.k}, True
        )
        _print(
            args,
            cert,
            [f"homomorphism to C_{2 * args.k + 1}: {list(res.mapping)} ({res.nodes} nodes)"],
        )
        return EXIT_OK
    cert = Certificate("hom", {"hom": None, "status": res.status, "k": args.k}, True)
    _print(args, cert, [f"status: {res.status} after {res.nodes} nodes"])
    return EXIT_NONE if res.status == "none" else EXIT_ERROR


def _cmd_gadget(args, caps: Caps) -> int:
    G, emb = gadget(args.k)
    if args.json:
        text = dump_json({"schema": 1, **model_json(G, embedding=emb)})
    elif args.dot:
        text = to_dot(G, name=f"gadget{args.k}")
    else:
        text = serialize_model(G, embedding=emb)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text, end="" if text.endswith("\n") else "\n")
    return EXIT_OK


def _cmd_dualize(args, caps: Caps) -> int:
    model = _load(args.graph)
    emb = _need_embedding(model, args.embedding)
    dres = dual(emb)
    if args.json:
        text = dump_json(
            {"schema": 1, **model_json(dres.dual_graph, embedding=dres.dual_embedding)}
        )
    elif args.dot:
        text = to_dot(dres.dual_graph, name="dual")
    else:
        text = serialize_model(dres.dual_graph, embedding=dres.dual_embedding)
    print(text, end="" if text.endswith("\n") else "\n")
    return EXIT_OK


def _cmd_signed_flow(args, caps: Caps) -> int:
    model = _load(args.graph)
    if model.signed is None:
        raise InvalidInput(
            "signed-flow needs a signed model (edge lines with two multiplicities)"
        )
    sg = model.signed
    cert_obj = signed_flow_pipeline(sg, args.k, caps)
    if cert_obj is None:
        cert = Certificate(
            "flow",
            {"status": "none", "k": args.k, "p": 4 * args.k, "q": 2 * args.k - 2},
            True,
        )
        _print(
            args,
            cert,
            [
                f"no strongly connected orientation of the doubled graph attains the "
                f"signature boundary at k={args.k}; no flow constructed"
            ],
        )
        return EXIT_NONE
    ok, problems = verify_signed_flow(sg, cert_obj.flow)
    if not ok:
        raise FalsificationEvent(f"constructed flow failed verification: {problems[0]}")
    flow = cert_obj.flow
    cert = Certificate(
        "flow",
        {
            "status": "found",
            "k": args.k,
            "p": flow.p,
            "q": flow.q,
            "values": {str(eid): flow.values[eid] for eid in sorted(flow.values)},
            "orientation": _orientation_payload(sg.graph, flow.orientation),
            "tight_cut": sorted(cert_obj.tight_cut) if cert_obj.tight_cut else None,
            "strict": cert_obj.strict,
        },
        True,
    )
    human = [f"circular {flow.p}/{flow.q}-flow:"]
    human += [
        f"  edge {eid} ({'+' if sg.signs[eid] > 0 else '-'}): "
        f"{flow.orientation.tail(sg.graph, eid)} -> {flow.orientation.head(sg.graph, eid)}"
        f"  value {flow.values[eid]}"
        for eid in sorted(flow.values)
    ]
    human.append(
        "strict (no tight cut)" if cert_obj.strict else f"tight cut: {sorted(cert_obj.tight_cut)}"
    )
    _print(args, cert, human)
    return EXIT_OK


def _cmd_detect(args, caps: Caps) -> int:
    G = _load(args.graph).graph
    matches = detect_config(G, args.config)
    for m in matches:
        for (a, b), mult in _threshold_map_for(m.pattern).items():
            if G.mu(m.assignment[a], m.assignment[b]) < mult:
                raise FalsificationEvent(
                    f"match {m.pattern}{m.assignment} fails its own thresholds"
                )
    payload = {
        "matches": [
            {"pattern": m.pattern, "assignment": list(m.assignment), "edges": list(m.edges)}
            for m in matches
        ]
    }
    cert = Certificate("match", payload, True)
    if matches:
        _print(
            args,
            cert,
            [f"{m.pattern}: vertices {list(m.assignment)}" for m in matches],
        )
        return EXIT_OK
    _print(args, cert, ["no catalog configuration occurs"])
    return EXIT_NONE


def _threshold_map_for(name: str) -> dict[tuple[int, int], int]:
    from .configurations import pattern_by_name

    return pattern_by_name(name).threshold_map()


def _cmd_solve9(args, caps: Caps) -> int:
    model = _load(args.graph)
    emb = None
    if args.embedding is not None:
        emb = _need_embedding(model, args.embedding)
    elif model.embedding is not None:
        emb = model.embedding
    D = solve_modular_9(model.graph, emb, caps=caps)
    if not check_zk_orientation(model.graph, D, 9, ZkBoundary.zero(9, model.graph.n)):
        raise FalsificationEvent("solver output failed the final zero-boundary check")
    cert = Certificate(
        "orientation",
        {"orientation": _orientation_payload(model.graph, D), "boundary": [0] * model.graph.n, "mod": 9},
        True,
    )
    human = [
        f"  edge {eid}: {D.tail(model.graph, eid)} -> {D.head(model.graph, eid)}"
        for eid in sorted(D.tails)
    ]
    _print(args, cert, ["modular 9-orientation:"] + human)
    return EXIT_OK


def _cmd_witness(args, caps: Caps) -> int:
    model = _load(args.graph)
    cert_obj = theorem_1_12_witness(model.graph, model.embedding, caps=caps)
    if cert_obj is None:
        cert = Certificate("match", {"clause": None, "status": "exhausted"}, True)
        _print(args, cert, ["no reduction certificate within the search bounds"])
        return EXIT_NONE
    payload = {
        "clause": cert_obj.clause,
        "description": cert_obj.description,
        "lifts": [list(step) for step in cert_obj.lifts],
        "subgraph_vertices": (
            list(cert_obj.subgraph_vertices) if cert_obj.subgraph_vertices else None
        ),
        "vertex": cert_obj.vertex,
    }
    cert = Certificate("match", payload, True)
    _print(
        args,
        cert,
        [f"clause {cert_obj.clause}: {cert_obj.description}"]
        + ([f"  lifts: {payload['lifts']}"] if cert_obj.lifts else [])
        + (
            [f"  subgraph vertices: {payload['subgraph_vertices']}"]
            if cert_obj.subgraph_vertices
            else []
        )
        + ([f"  vertex: {cert_obj.vertex}"] if cert_obj.vertex is not None else []),
    )
    return EXIT_OK


def _cmd_discharge(args, caps: Caps) -> int:
    model = _load(args.graph)
    emb = _need_embedding(model, args.embedding)
    ledger = apply_rules(model.graph, emb)
    if not ledger.conserved:
        raise FalsificationEvent("ledger failed charge conservation")
    reports = verdict(ledger)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(ledger.transfers_csv())
    payload = {
        "faces": [
            {
                "index": fc.index,
                "degree": fc.degree,
                "kind": fc.kind,
                "params": list(fc.params) if fc.params else None,
                "initial": str(ledger.initial_charge(fc.index)),
                "final": str(ledger.charge(fc.index)),
            }
            for fc in ledger.classes
        ],
        "transfers": len(ledger.transfers),
        "deficient": [
            {
                "face": r.face,
                "charge": str(r.charge),
                "matches": [
                    {"pattern": m.pattern, "assignment": list(m.assignment)}
                    for m in r.matches
                ],
            }
            for r in reports
        ],
        "notes": list(ledger.notes),
    }
    cert = Certificate("ledger", payload, True)
    want_json = args.json or args.report == "json"
    if want_json:
        sys.stdout.write(cert.as_json())
    else:
        print(
            f"{len(ledger.classes)} faces, {len(ledger.transfers)} transfers, "
            "conservation holds"
        )
        for fc in ledger.classes:
            print(
                f"  face {fc.index}: {fc.kind} (degree {fc.degree})"
                + (f" params {fc.params}" if fc.params else "")
                + f"  charge {ledger.charge(fc.index)}"
            )
        if reports:
            print("faces below 46/21:")
            for r in reports:
                print(f"  face {r.face} at {r.charge}")
                for m in r.matches:
                    print(f"    nearby configuration {m.pattern} at {list(m.assignment)}")
        else:
            print("every face retains at least 46/21")
        for note in ledger.notes:
            print(f"note: {note}")
    return EXIT_OK if not reports else EXIT_NONE


def _cmd_verify_paper(args, caps: Caps) -> int:
    only = set(args.only.split(",")) if args.only else None
    rep = run_verify_paper(args.scale, caps, only=only)
    payload = {
        "scale": rep.scale,
        "ok": rep.ok,
        "items": [
            {
                "id": it.item_id,
                "label": it.label,
                "passed": it.passed,
                "seconds": round(it.seconds, 3),
                "detail": it.detail,
            }
            for it in rep.items
        ],
    }
    cert = Certificate("suite-report", payload, rep.ok)
    _print(args, cert, rep.format_lines())
    return EXIT_OK if rep.ok else EXIT_NONE


# ----------------------------------------------------------------------
# Parser
# ----------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="orient9",
        description="modular orientations, circular flows and odd-cycle homomorphisms",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="emit a JSON certificate")
        p.set_defaults(handler=handler)
        return p

    p = add("weight", _cmd_weight, "minimum partition weight w(G) with a witness")
    p.add_argument("graph")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--min", action="store_true", help="minimum only (default)")
    mode.add_argument(
        "--all-partitions", action="store_true", help="list every partition's weight"
    )

    p = add("sz", _cmd_sz, "strong Z_k-connectivity membership")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("graph")

    p = add("sc", _cmd_sc, "SC_k membership (strongly connected orientations)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("graph")

    p = add("orient", _cmd_orient, "orientation with a prescribed boundary")
    p.add_argument("--mod", type=int, default=9)
    p.add_argument("--boundary", help="file of '<vertex> <value>' lines")
    p.add_argument("graph")

    p = add("hom", _cmd_hom, "homomorphism to the odd cycle C_{2k+1}")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("graph")

    p = add("gadget", _cmd_gadget, "embedded odd-girth-(4k-1) graph with no hom")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("-o", "--output", help="write the model here instead of stdout")
    p.add_argument("--dot", action="store_true", help="emit DOT instead of model text")

    p = add("dualize", _cmd_dualize, "plane dual of an embedded model")
    p.add_argument("graph")
    p.add_argument("embedding", nargs="?", help="rotation file (if not in the model)")
    p.add_argument("--dot", action="store_true", help="emit DOT instead of model text")

    p = add("signed-flow", _cmd_signed_flow, "circular 4k/(2k-2)-flow on a signed model")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("graph")

    p = add("detect", _cmd_detect, "find reducible configurations from the catalog")
    p.add_argument("--config", default="all", help="pattern name (default: all)")
    p.add_argument("graph")

    p = add("solve9", _cmd_solve9, "modular 9-orientation via the full reduction pipeline")
    p.add_argument("--embedding", help="rotation file (if not in the model)")
    p.add_argument("graph")

    p = add("witness-1-12", _cmd_witness, "reduction-clause certificate search")
    p.add_argument("graph")

    p = add("discharge", _cmd_discharge, "face charging with the three discharging rules")
    p.add_argument("graph")
    p.add_argument("embedding", nargs="?", help="rotation file (if not in the model)")
    p.add_argument("--report", choices=("human", "json"), default="human")
    p.add_argument("--csv", help="write the transfer log to this CSV file")

    p = add("verify-paper", _cmd_verify_paper, "run the acceptance suite")
    p.add_argument("--scale", choices=("quick", "full"), default="quick")
    p.add_argument("--only", help="comma-separated item ids, e.g. A1,A10")

    return top


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        caps = caps_from_env()
        return args.handler(args, caps)
    except FalsificationEvent as exc:
        print(f"FALSIFICATION: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except InvalidInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
