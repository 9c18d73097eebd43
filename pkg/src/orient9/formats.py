"""Text, DOT and JSON formats for multigraphs, embeddings and signed graphs.

Model files are line-oriented; ``#`` starts a comment anywhere on a line.

* ``graph <n>``                -- first directive; number of vertices.
* ``edge <u> <v> <mult>``      -- ``mult`` parallel edges between u and v.
* ``edge <u> <v> <m+> <m->``   -- signed: positive then negative parallels.
* ``rot <v> <end ...>``        -- clockwise rotation at ``v`` (end ids;
                                  end 2e is the u-side of edge e, 2e+1 the
                                  v-side).

Edge ids are assigned in file order, one run of consecutive ids per ``edge``
line (positives before negatives on signed lines), which is what the ``rot``
end ids refer to.  Signed and unsigned edge lines cannot be mixed in one
file.  A file with ``rot`` lines must give one per vertex.

Boundary files (for prescribed-boundary orientation searches) hold one
``<vertex> <value>`` pair per line.

DOT export collapses each parallel class to a single edge labelled with its
multiplicity, which is the readable rendering for the heavy multigraphs this
package works with.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .embedding import PlaneEmbedding
from .errors import InvalidInput
from .graph import Multigraph
from .signedgraphs import SignedGraph

__all__ = [
    "ParsedModel",
    "parse_model",
    "parse_model_file",
    "parse_boundary",
    "parse_rotation",
    "serialize_model",
    "to_dot",
    "model_json",
    "dump_json",
]


@dataclass(frozen=True)
class ParsedModel:
    """A parsed model file: graph, optional embedding, optional signs."""

    graph: Multigraph
    embedding: PlaneEmbedding | None = None
    signed: SignedGraph | None = None

    @property
    def is_signed(self) -> bool:
        return self.signed is not None


_TOKEN = re.compile(r"\S+")


def _fail(source: str, line: int, col: int, message: str) -> InvalidInput:
    return InvalidInput(f"{source}:{line}:{col}: {message}")


def _tokenize(text: str):
    """Yield (lineno, [(token, column), ...]) for non-empty lines."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        tokens = [(m.group(), m.start() + 1) for m in _TOKEN.finditer(body)]
        if tokens:
            yield lineno, tokens


def _int_token(source: str, lineno: int, tok: tuple[str, int], what: str) -> int:
    text, col = tok
    try:
        return int(text)
    except ValueError:
        raise _fail(source, lineno, col, f"expected an integer {what}, got {text!r}")


def parse_model(text: str, source: str = "<string>") -> ParsedModel:
    """Parse a model file; errors carry ``source:line:column``."""
    n: int | None = None
    pairs: list[tuple[int, int]] = []
    signs: list[int] = []
    saw_signed = False
    saw_unsigned = False
    rot_lines: dict[int, tuple[list[int], int]] = {}
    for lineno, tokens in _tokenize(text):
        keyword, kcol = tokens[0]
        args = tokens[1:]
        if keyword == "graph":
            if n is not None:
                raise _fail(source, lineno, kcol, "duplicate 'graph' directive")
            if pairs or rot_lines:
                raise _fail(source, lineno, kcol, "'graph' must come first")
            if len(args) != 1:
                raise _fail(source, lineno, kcol, "usage: graph <n>")
            n = _int_token(source, lineno, args[0], "vertex count")
            if n < 1:
                raise _fail(source, lineno, args[0][1], "vertex count must be >= 1")
        elif keyword == "edge":
            if n is None:
                raise _fail(source, lineno, kcol, "'edge' before 'graph <n>'")
            if len(args) not in (3, 4):
                raise _fail(
                    source, lineno, kcol, "usage: edge <u> <v> <mult> [<mult->]"
                )
            u = _int_token(source, lineno, args[0], "vertex")
            v = _int_token(source, lineno, args[1], "vertex")
            for val, tok in ((u, args[0]), (v, args[1])):
                if not 0 <= val < n:
                    raise _fail(
                        source, lineno, tok[1], f"vertex {val} out of range 0..{n - 1}"
                    )
            if u == v:
                raise _fail(source, lineno, args[1][1], f"loop at vertex {u} not allowed")
            if len(args) == 3:
                saw_unsigned = True
                mult = _int_token(source, lineno, args[2], "multiplicity")
                if mult < 1:
                    raise _fail(source, lineno, args[2][1], "multiplicity must be >= 1")
                pairs.extend([(u, v)] * mult)
                signs.extend([1] * mult)
            else:
                saw_signed = True
                pos = _int_token(source, lineno, args[2], "positive multiplicity")
                neg = _int_token(source, lineno, args[3], "negative multiplicity")
                if pos < 0 or neg < 0 or pos + neg == 0:
                    raise _fail(
                        source,
                        lineno,
                        args[2][1],
                        "signed multiplicities must be >= 0 and not both zero",
                    )
                pairs.extend([(u, v)] * (pos + neg))
                signs.extend([1] * pos + [-1] * neg)
            if saw_signed and saw_unsigned:
                raise _fail(
                    source, lineno, kcol, "cannot mix signed and unsigned edge lines"
                )
        elif keyword == "rot":
            if n is None:
                raise _fail(source, lineno, kcol, "'rot' before 'graph <n>'")
            if len(args) < 1:
                raise _fail(source, lineno, kcol, "usage: rot <v> <end ...>")
            v = _int_token(source, lineno, args[0], "vertex")
            if not 0 <= v < n:
                raise _fail(
                    source, lineno, args[0][1], f"vertex {v} out of range 0..{n - 1}"
                )
            if v in rot_lines:
                raise _fail(source, lineno, args[0][1], f"duplicate rotation for vertex {v}")
            ends = [_int_token(source, lineno, t, "end id") for t in args[1:]]
            rot_lines[v] = (ends, lineno)
        else:
            raise _fail(
                source,
                lineno,
                kcol,
                f"unknown directive {keyword!r} (expected graph/edge/rot)",
            )
    if n is None:
        raise InvalidInput(f"{source}: no 'graph <n>' directive found")
    G = Multigraph.from_pairs(n, pairs)
    signed = None
    if saw_signed:
        signed = SignedGraph(G, {eid: signs[eid] for eid in range(len(signs))})
    embedding = None
    if rot_lines:
        missing = [v for v in range(n) if v not in rot_lines]
        if missing:
            raise InvalidInput(
                f"{source}: rotation lines missing for vertices {missing}"
            )
        rotation = [rot_lines[v][0] for v in range(n)]
        try:
            embedding = PlaneEmbedding(G, rotation)
        except InvalidInput as exc:
            raise InvalidInput(f"{source}: inconsistent rotation system: {exc}")
    return ParsedModel(graph=G, embedding=embedding, signed=signed)


def parse_model_file(path: str) -> ParsedModel:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_model(fh.read(), source=path)


def parse_rotation(text: str, G: Multigraph, source: str = "<string>") -> PlaneEmbedding:
    """Parse a standalone rotation file (``rot`` lines only) against ``G``.

    A leading ``graph <n>`` directive is allowed and must match ``G``; edge
    lines are not (the edges already exist).
    """
    rot_lines: dict[int, list[int]] = {}
    for lineno, tokens in _tokenize(text):
        keyword, kcol = tokens[0]
        args = tokens[1:]
        if keyword == "graph":
            if rot_lines:
                raise _fail(source, lineno, kcol, "'graph' must come first")
            if len(args) != 1 or _int_token(source, lineno, args[0], "vertex count") != G.n:
                raise _fail(source, lineno, kcol, f"vertex count must be {G.n}")
        elif keyword == "rot":
            if len(args) < 1:
                raise _fail(source, lineno, kcol, "usage: rot <v> <end ...>")
            v = _int_token(source, lineno, args[0], "vertex")
            if not 0 <= v < G.n:
                raise _fail(source, lineno, args[0][1], f"vertex {v} out of range 0..{G.n - 1}")
            if v in rot_lines:
                raise _fail(source, lineno, args[0][1], f"duplicate rotation for vertex {v}")
            rot_lines[v] = [_int_token(source, lineno, t, "end id") for t in args[1:]]
        else:
            raise _fail(
                source, lineno, kcol, f"unknown directive {keyword!r} in a rotation file"
            )
    missing = [v for v in range(G.n) if v not in rot_lines]
    if missing:
        raise InvalidInput(f"{source}: rotation lines missing for vertices {missing}")
    try:
        return PlaneEmbedding(G, [rot_lines[v] for v in range(G.n)])
    except InvalidInput as exc:
        raise InvalidInput(f"{source}: inconsistent rotation system: {exc}")


def parse_boundary(text: str, n: int, source: str = "<string>") -> list[int]:
    """Parse a ``<vertex> <value>`` boundary file; unset vertices get 0."""
    values = [0] * n
    seen: set[int] = set()
    for lineno, tokens in _tokenize(text):
        if len(tokens) != 2:
            raise _fail(source, lineno, tokens[0][1], "usage: <vertex> <value>")
        v = _int_token(source, lineno, tokens[0], "vertex")
        if not 0 <= v < n:
            raise _fail(
                source, lineno, tokens[0][1], f"vertex {v} out of range 0..{n - 1}"
            )
        if v in seen:
            raise _fail(source, lineno, tokens[0][1], f"duplicate value for vertex {v}")
        seen.add(v)
        values[v] = _int_token(source, lineno, tokens[1], "value")
    return values


def _edge_runs(G: Multigraph, signs: dict[int, int] | None):
    """Maximal runs of consecutive edge ids sharing endpoint pair (and sign)."""
    runs: list[tuple[tuple[int, int], int, int]] = []  # ((u, v) stored, sign, count)
    for eid in sorted(G.edge_ids()):
        e = G.edge(eid)
        stored = (e.u, e.v)  # stored order decides which end is 2e vs 2e+1
        sign = signs[eid] if signs is not None else 1
        if runs and runs[-1][0] == stored and runs[-1][1] == sign:
            runs[-1] = (stored, sign, runs[-1][2] + 1)
        else:
            runs.append((stored, sign, 1))
    return runs


def serialize_model(
    G: Multigraph,
    embedding: PlaneEmbedding | None = None,
    signed: SignedGraph | None = None,
) -> str:
    """Render a model back to text that ``parse_model`` reproduces.

    The parser assigns edge ids in file order, so ids are renumbered densely
    here (ascending id order, one run of consecutive ids per ``edge`` line)
    and rotation end ids are rewritten to match.  For graphs whose ids are
    already ``0..e-1`` — every parsed model — the round trip is exact;
    otherwise the result is the same graph under the dense relabelling.
    """
    if signed is not None and signed.graph != G:
        raise InvalidInput("signature does not belong to this graph")
    if embedding is not None and embedding.graph != G:
        raise InvalidInput("embedding does not belong to this graph")
    lines = [f"graph {G.n}"]
    signs = signed.signs if signed is not None else None
    for (u, v), sign, count in _edge_runs(G, signs):
        if signs is None:
            lines.append(f"edge {u} {v} {count}")
        elif sign == 1:
            lines.append(f"edge {u} {v} {count} 0")
        else:
            lines.append(f"edge {u} {v} 0 {count}")
    if embedding is not None:
        idmap = {old: new for new, old in enumerate(sorted(G.edge_ids()))}
        for v in range(G.n):
            ends = " ".join(
                str(2 * idmap[t // 2] + t % 2) for t in embedding.rotation[v]
            )
            lines.append(f"rot {v} {ends}")
    return "\n".join(lines) + "\n"


def to_dot(G: Multigraph, signed: SignedGraph | None = None, name: str = "G") -> str:
    """DOT rendering with one edge per parallel class, labelled by multiplicity."""
    lines = [f"graph {name} {{"]
    for v in range(G.n):
        lines.append(f"  {v};")
    if signed is None:
        for (u, v) in sorted(G.pair_classes()):
            mu = G.mu(u, v)
            label = f"x{mu}" if mu > 1 else ""
            attr = f' [label="{label}"]' if label else ""
            lines.append(f"  {u} -- {v}{attr};")
    else:
        by_pair: dict[tuple[int, int], list[int]] = {}
        for eid in G.edge_ids():
            e = G.edge(eid)
            u, v = sorted(e.pair)
            by_pair.setdefault((u, v), []).append(signed.signs[eid])
        for (u, v), ss in sorted(by_pair.items()):
            pos = sum(1 for s in ss if s == 1)
            neg = len(ss) - pos
            label = f"+{pos}/-{neg}"
            lines.append(f'  {u} -- {v} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def model_json(
    G: Multigraph,
    embedding: PlaneEmbedding | None = None,
    signed: SignedGraph | None = None,
) -> dict:
    """JSON-ready dict for a model (schema version 1)."""
    doc: dict = {
        "schema": 1,
        "n": G.n,
        "edges": [[G.edge(eid).u, G.edge(eid).v] for eid in sorted(G.edge_ids())],
    }
    if signed is not None:
        doc["signs"] = [signed.signs[eid] for eid in sorted(G.edge_ids())]
    if embedding is not None:
        doc["rotation"] = [list(r) for r in embedding.rotation]
    return doc


def dump_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
