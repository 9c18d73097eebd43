"""The catalog of forbidden multiplicity configurations and its detector.

Each entry is data: a small template on labeled vertices, a minimum
multiplicity per template pair, and (where applicable) a lifting recipe that
collapses any occurrence onto a smaller terminal shape.  Containment is
monotone — larger multiplicities still match — and "occurrence" means an
injective assignment of template vertices to graph vertices meeting every
pair threshold.  All template vertices must land on distinct graph vertices,
including the degree-2 vertices that carry subdivided sides.

Shape naming follows the usual multiplicity notation: ``aK_2`` is a doubled
pair, ``T_{a,b,c}`` a triangle with side multiplicities, ``Q``/``V`` a
quadrilateral/pentagon read the same way, a ``^o`` superscript marks one
parallel edge of the heaviest side rerouted through extra degree-2 vertices
(once per ``o``), and ``6C_4^+`` is the 6,6,6,6 quadrilateral plus one extra
parallel edge.  ``F`` is the 4,4,4 triangle with three pendant length-2
paths (multiplicities 1,1 / 2,2 / 1,1) hanging across its corners.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

from .errors import InvalidInput
from .graph import Multigraph, lift_pair

__all__ = [
    "ConfigPattern",
    "ConfigMatch",
    "CATALOG",
    "pattern_by_name",
    "detect_config",
    "apply_lift_recipe",
]


@dataclass(frozen=True)
class ConfigPattern:
    """A template: pair thresholds on ``n`` labeled vertices plus a lift plan.

    ``recipe`` lists ``(mid, a, b)`` lifting steps in template labels:
    replace one ``a-mid`` and one ``mid-b`` edge by a direct ``a-b`` edge.
    ``target`` names the shape the minimal occurrence collapses to; terminal
    entries (already minimal) have no recipe.
    """

    name: str
    n: int
    thresholds: tuple[tuple[tuple[int, int], int], ...]
    description: str
    target: str | None = None
    recipe: tuple[tuple[int, int, int], ...] = ()

    def threshold_map(self) -> dict[tuple[int, int], int]:
        return dict(self.thresholds)

    def min_edges(self) -> int:
        return sum(m for _, m in self.thresholds)

    def automorphisms(self) -> list[tuple[int, ...]]:
        """Template-label permutations preserving every pair threshold."""
        thr = self.threshold_map()
        pairs = list(itertools.combinations(range(self.n), 2))
        out = []
        for perm in itertools.permutations(range(self.n)):
            if all(
                thr.get((a, b), 0)
                == thr.get(tuple(sorted((perm[a], perm[b]))), 0)
                for a, b in pairs
            ):
                out.append(perm)
        return out

    def minimal_instance(self) -> Multigraph:
        """The template itself, with exactly the threshold multiplicities."""
        return Multigraph.from_multiplicities(self.n, self.threshold_map())


@dataclass(frozen=True)
class ConfigMatch:
    """One occurrence: template name, vertex assignment, witnessing edge ids.

    ``assignment[i]`` is the graph vertex playing template vertex ``i``;
    ``edges`` lists, per thresholded pair, the threshold-many lowest edge ids
    between the assigned endpoints.
    """

    pattern: str
    assignment: tuple[int, ...]
    edges: tuple[int, ...]


def _entry(name, n, thr, description, target=None, recipe=()):
    return ConfigPattern(
        name,
        n,
        tuple(sorted(thr.items())),
        description,
        target,
        tuple(recipe),
    )


CATALOG: tuple[ConfigPattern, ...] = (
    _entry(
        "8K_2",
        2,
        {(0, 1): 8},
        "two vertices joined by 8 parallel edges (terminal shape)",
    ),
    _entry(
        "T_{1,1,7}",
        3,
        {(0, 1): 7, (0, 2): 1, (1, 2): 1},
        "triangle, sides 7/1/1; vertices 0,1 carry the heavy side",
        target="8K_2",
        recipe=[(2, 0, 1)],
    ),
    _entry(
        "T_{2,2,6}",
        3,
        {(0, 1): 6, (0, 2): 2, (1, 2): 2},
        "triangle, sides 6/2/2",
        target="8K_2",
        recipe=[(2, 0, 1), (2, 0, 1)],
    ),
    _entry(
        "T_{3,3,5}",
        3,
        {(0, 1): 5, (0, 2): 3, (1, 2): 3},
        "triangle, sides 5/3/3",
        target="8K_2",
        recipe=[(2, 0, 1), (2, 0, 1), (2, 0, 1)],
    ),
    _entry(
        "T^o_{1,1,7}",
        4,
        {(0, 1): 6, (0, 2): 1, (1, 2): 1, (0, 3): 1, (1, 3): 1},
        "triangle 7/1/1 with one heavy-side edge subdivided: 6 direct edges "
        "plus a length-2 path through vertex 2; vertex 3 is the light path",
        target="8K_2",
        recipe=[(2, 0, 1), (3, 0, 1)],
    ),
    _entry(
        "T^o_{2,2,6}",
        4,
        {(0, 1): 5, (0, 2): 2, (1, 2): 2, (0, 3): 1, (1, 3): 1},
        "triangle 6/2/2 with one heavy-side edge subdivided (5 direct edges "
        "plus a length-2 path through vertex 3); vertex 2 carries the 2/2 legs",
        target="8K_2",
        recipe=[(2, 0, 1), (2, 0, 1), (3, 0, 1)],
    ),
    _entry(
        "Q_{1,1,1,7}",
        4,
        {(0, 1): 7, (0, 2): 1, (2, 3): 1, (1, 3): 1},
        "quadrilateral 0-2-3-1 with a 7-fold chord side 0-1",
        target="8K_2",
        recipe=[(2, 0, 3), (3, 0, 1)],
    ),
    _entry(
        "Q^o_{1,1,1,7}",
        5,
        {(0, 1): 6, (0, 2): 1, (1, 2): 1, (0, 3): 1, (3, 4): 1, (1, 4): 1},
        "the 1,1,1,7 quadrilateral with one heavy-side edge subdivided "
        "through vertex 2; the light path runs 0-3-4-1",
        target="8K_2",
        recipe=[(3, 0, 4), (4, 0, 1), (2, 0, 1)],
    ),
    _entry(
        "Q^o_{6,6,6,7}",
        6,
        {(0, 1): 6, (1, 2): 6, (2, 3): 6, (0, 3): 6, (0, 4): 1, (4, 5): 1, (3, 5): 1},
        "quadrilateral 0-1-2-3 with all sides 6 and the seventh parallel of "
        "side 0-3 rerouted as the length-3 path 0-4-5-3",
        target="6C_4^+",
        recipe=[(4, 0, 5), (5, 0, 3)],
    ),
    _entry(
        "Q^{oo}_{6,6,6,7}",
        5,
        {(0, 1): 6, (1, 2): 6, (2, 3): 6, (0, 3): 5, (0, 4): 2, (3, 4): 2},
        "quadrilateral 0-1-2-3, sides 6/6/6/5, with vertex 4 carrying doubled "
        "legs to 0 and 3 in place of two parallels of the fourth side",
        target="6C_4^+",
        recipe=[(4, 0, 3), (4, 0, 3)],
    ),
    _entry(
        "V_{1,1,1,1,7}",
        5,
        {(0, 1): 7, (0, 2): 1, (2, 3): 1, (3, 4): 1, (1, 4): 1},
        "pentagon 0-2-3-4-1 with a 7-fold chord side 0-1",
        target="8K_2",
        recipe=[(2, 0, 3), (3, 0, 4), (4, 0, 1)],
    ),
    _entry(
        "multi-K_4",
        4,
        {(0, 1): 1, (0, 2): 1, (0, 3): 1, (1, 2): 1, (1, 3): 1, (2, 3): 1},
        "four vertices with every pair adjacent (diagnostic entry; no lift)",
    ),
    _entry(
        "F",
        6,
        {
            (0, 1): 4,
            (1, 2): 4,
            (0, 2): 4,
            (3, 0): 1,
            (3, 2): 1,
            (4, 0): 2,
            (4, 1): 2,
            (5, 1): 1,
            (5, 2): 1,
        },
        "triangle 0-1-2 with all sides 4 and three corner-spanning length-2 "
        "paths: vertex 3 over 0-2 (1/1), vertex 4 over 0-1 (2/2), vertex 5 "
        "over 1-2 (1/1)",
        target="T_{5,5,6}",
        recipe=[(3, 0, 2), (4, 0, 1), (4, 0, 1), (5, 1, 2)],
    ),
    _entry(
        "6C_4^+",
        4,
        {(0, 1): 7, (1, 2): 6, (2, 3): 6, (0, 3): 6},
        "quadrilateral with sides 7/6/6/6 (terminal shape)",
    ),
)


def _normalize(name: str) -> str:
    return re.sub(r"[^0-9a-z+]+", "", name.lower())


_BY_NORMALIZED = {_normalize(p.name): p for p in CATALOG}


def pattern_by_name(name: str) -> ConfigPattern:
    try:
        return _BY_NORMALIZED[_normalize(name)]
    except KeyError:
        raise InvalidInput(
            f"unknown configuration {name!r}; known: " + ", ".join(p.name for p in CATALOG)
        ) from None


def _matches_of(G: Multigraph, pat: ConfigPattern) -> list[ConfigMatch]:
    if G.n < pat.n:
        return []
    thr = pat.threshold_map()
    # constraints per template vertex, and a degree prune
    need_at: list[list[tuple[int, int]]] = [[] for _ in range(pat.n)]
    deg_need = [0] * pat.n
    for (a, b), m in thr.items():
        need_at[a].append((b, m))
        need_at[b].append((a, m))
        deg_need[a] += m
        deg_need[b] += m
    order = sorted(range(pat.n), key=lambda v: (-deg_need[v], v))
    pos = {v: i for i, v in enumerate(order)}

    autos = pat.automorphisms()
    canon: set[tuple[int, ...]] = set()
    assign: dict[int, int] = {}

    def rec(i: int) -> None:
        if i == pat.n:
            full = tuple(assign[v] for v in range(pat.n))
            canon.add(min(tuple(full[a] for a in perm) for perm in autos))
            return
        pv = order[i]
        for gv in range(G.n):
            if gv in assign.values():
                continue
            if G.degree(gv) < deg_need[pv]:
                continue
            ok = True
            for other, m in need_at[pv]:
                if pos[other] < i and G.mu(gv, assign[other]) < m:
                    ok = False
                    break
            if ok:
                assign[pv] = gv
                rec(i + 1)
                del assign[pv]

    rec(0)

    out = []
    for full in sorted(canon):
        eids: list[int] = []
        for (a, b), m in sorted(thr.items()):
            u, v = full[a], full[b]
            pair_ids = sorted(e for e in G.incident(u) if G.edge(e).other(u) == v)
            eids.extend(pair_ids[:m])
        out.append(ConfigMatch(pat.name, full, tuple(sorted(eids))))
    return out


def detect_config(G: Multigraph, name: str = "all") -> list[ConfigMatch]:
    """All occurrences of one catalog entry (or every entry), deduplicated.

    Two assignments related by a template symmetry count once; the reported
    assignment is the lexicographically smallest in its orbit.  Results come
    back in catalog order, then by assignment.
    """
    pats = CATALOG if name == "all" else (pattern_by_name(name),)
    out: list[ConfigMatch] = []
    for pat in pats:
        out.extend(_matches_of(G, pat))
    return out


def apply_lift_recipe(G: Multigraph, match: ConfigMatch) -> tuple[Multigraph, list[int]]:
    """Run the matched entry's lifting recipe on ``G``.

    Returns the lifted graph and the ids of the edges the lifts created.
    Raises InvalidInput for terminal entries (no recipe).
    """
    pat = pattern_by_name(match.pattern)
    if not pat.recipe:
        raise InvalidInput(f"{pat.name} is terminal; it has no lift recipe")
    cur = G
    created: list[int] = []
    for mid, a, b in pat.recipe:
        res = lift_pair(cur, match.assignment[mid], match.assignment[a], match.assignment[b])
        cur = res.graph
        created.append(res.new_edge_id)
    return cur, created
