"""Builders for the small multigraph families used throughout the package.

Everything here is an abstract :class:`~orient9.graph.Multigraph`; plane
embeddings for the cyclic shapes come from
:func:`orient9.embedding.embed_cycle_multigraph`.
"""

from __future__ import annotations

from typing import Sequence

from .errors import InvalidInput
from .graph import Multigraph

__all__ = [
    "alpha_k2",
    "cycle_multigraph",
    "triangle",
    "quad",
    "pentagon",
    "path_multigraph",
    "k4_multigraph",
    "complete_multigraph",
]

#: unordered vertex pairs of the complete graph on {0,1,2,3}, in the fixed
#: order used by :func:`k4_multigraph` multiplicity tuples.
K4_PAIRS: tuple[tuple[int, int], ...] = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def alpha_k2(alpha: int) -> Multigraph:
    """Two vertices joined by ``alpha >= 1`` parallel edges."""
    if alpha < 1:
        raise InvalidInput("alpha_k2 needs alpha >= 1")
    return Multigraph.from_pairs(2, [(0, 1)] * alpha)


def cycle_multigraph(mults: Sequence[int]) -> Multigraph:
    """Cycle on ``t = len(mults) >= 3`` vertices; side ``i`` joins ``i, i+1 mod t``
    with multiplicity ``mults[i] >= 1``.  Edge ids run side by side."""
    t = len(mults)
    if t < 3:
        raise InvalidInput("cycle needs at least three sides")
    if any(m < 1 for m in mults):
        raise InvalidInput("every side needs multiplicity at least 1")
    pairs = [(i, (i + 1) % t) for i, m in enumerate(mults) for _ in range(m)]
    return Multigraph.from_pairs(t, pairs)


def triangle(a: int, b: int, c: int) -> Multigraph:
    """Three vertices with pair multiplicities ``mu(0,1)=a, mu(1,2)=b, mu(0,2)=c``."""
    return cycle_multigraph([a, b, c])


def quad(a: int, b: int, c: int, d: int) -> Multigraph:
    """Four-cycle with side multiplicities ``a, b, c, d`` and no diagonals."""
    return cycle_multigraph([a, b, c, d])


def pentagon(a: int, b: int, c: int, d: int, e: int) -> Multigraph:
    """Five-cycle with side multiplicities ``a .. e`` and no chords."""
    return cycle_multigraph([a, b, c, d, e])


def path_multigraph(mults: Sequence[int]) -> Multigraph:
    """Path on ``len(mults) + 1`` vertices; segment ``i`` joins ``i, i+1``."""
    if not mults:
        raise InvalidInput("path needs at least one segment")
    if any(m < 1 for m in mults):
        raise InvalidInput("every segment needs multiplicity at least 1")
    pairs = [(i, i + 1) for i, m in enumerate(mults) for _ in range(m)]
    return Multigraph.from_pairs(len(mults) + 1, pairs)


def k4_multigraph(mults: Sequence[int]) -> Multigraph:
    """Complete 4-vertex multigraph; ``mults`` follows :data:`K4_PAIRS` order."""
    if len(mults) != 6:
        raise InvalidInput("k4_multigraph needs six multiplicities")
    if any(m < 1 for m in mults):
        raise InvalidInput("every pair needs multiplicity at least 1")
    pairs = [p for p, m in zip(K4_PAIRS, mults) for _ in range(m)]
    return Multigraph.from_pairs(4, pairs)


def complete_multigraph(n: int, mu: int = 1) -> Multigraph:
    """``K_n`` with every pair multiplicity ``mu``."""
    if n < 2 or mu < 1:
        raise InvalidInput("complete_multigraph needs n >= 2 and mu >= 1")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) for _ in range(mu)]
    return Multigraph.from_pairs(n, pairs)
