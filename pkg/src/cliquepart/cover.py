"""Maximal clique cover and the shared-vertex metadata the search runs on.

Clique indices are 1-based throughout the public surface, matching the
usual convention for cover positions; vertex ids stay 0-based.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, VertexSet


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def maximal_cliques(g: Graph) -> list[VertexSet]:
    """All maximal cliques, in canonical order.

    Bron-Kerbosch with pivoting over arbitrary-precision int masks; the
    result is sorted lexicographically by ascending vertex-id tuple, which
    fixes the cover order everything downstream depends on.
    """
    if g.n == 0:
        return []
    adj = [0] * g.n
    for v in range(g.n):
        m = 0
        for u in g.adj[v]:
            m |= 1 << u
        adj[v] = m
    found: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            found.append(r)
            return
        pivot = max(_iter_bits(p | x), key=lambda u: (p & adj[u]).bit_count())
        for v in _iter_bits(p & ~adj[pivot]):
            bit = 1 << v
            expand(r | bit, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit

    expand(0, (1 << g.n) - 1, 0)
    cliques = [VertexSet(g.n, _iter_bits(m)) for m in found]
    cliques.sort(key=lambda c: tuple(c))
    return cliques


@dataclass(frozen=True)
class CoverContext:
    """A graph together with a fixed clique cover and derived lookups.

    cliques[i-1] is cover position i. cliques_of[v] is the set of cover
    positions containing v, d[v] its size, rigid the positions that are
    some vertex's only home, and shared the decision order over vertices
    with d(v) > 1.
    """

    graph: Graph
    cliques: tuple[VertexSet, ...]
    m: int
    cliques_of: tuple[frozenset[int], ...]
    d: tuple[int, ...]
    rigid: frozenset[int]
    shared: tuple[int, ...]


def build_cover_context(
    g: Graph,
    cliques: Sequence[VertexSet],
    shared_order: Sequence[int] | None = None,
) -> CoverContext:
    """Assemble a CoverContext from an explicit cover.

    The cover must consist of cliques of g that jointly contain every
    vertex; shared_order, when given, must be a permutation of the
    vertices appearing in more than one clique (default: ascending id).
    """
    from .graph import is_clique

    cliques = tuple(cliques)
    member_sets: list[set[int]] = [set() for _ in range(g.n)]
    for pos, c in enumerate(cliques, 1):
        if not isinstance(c, VertexSet) or c.nbits != g.n:
            raise ValueError(f"cover position {pos} has wrong width")
        if not is_clique(g, c):
            raise ValueError(f"cover position {pos} is not a clique")
        for v in c:
            member_sets[v].add(pos)
    for v, s in enumerate(member_sets):
        if not s:
            raise ValueError(
                f"vertex {g.label(v)} is not covered by any clique"
            )
    cliques_of = tuple(frozenset(s) for s in member_sets)
    d = tuple(len(s) for s in cliques_of)
    rigid = frozenset(
        next(iter(s)) for s in cliques_of if len(s) == 1
    )
    multi = [v for v in range(g.n) if d[v] > 1]
    if shared_order is None:
        shared = tuple(multi)
    else:
        shared = tuple(int(v) for v in shared_order)
        if sorted(shared) != multi:
            raise ValueError(
                "shared_order must be a permutation of the vertices "
                "lying in more than one clique"
            )
    return CoverContext(
        graph=g,
        cliques=cliques,
        m=len(cliques),
        cliques_of=cliques_of,
        d=d,
        rigid=rigid,
        shared=shared,
    )


def cover_context(g: Graph) -> CoverContext:
    """CoverContext over the canonical maximal clique cover of g."""
    return build_cover_context(g, maximal_cliques(g))


def cliques_of_set(ctx: CoverContext, vertices) -> frozenset[int]:
    """Cover positions whose clique contains every given vertex.

    Intersection of cliques_of over a nonempty vertex set; empty exactly
    when the set is not a clique of the cover's graph.
    """
    if isinstance(vertices, VertexSet):
        ids = list(vertices)
    else:
        ids = [int(v) for v in vertices]
    if not ids:
        raise ValueError("cliques_of_set is undefined for the empty set")
    out = ctx.cliques_of[ids[0]]
    for v in ids[1:]:
        out = out & ctx.cliques_of[v]
        if not out:
            break
    return out


def count_upper_bound(ctx: CoverContext) -> int:
    """Product of d(v) over all vertices; bounds the partition count.

    Arbitrary-precision: the result is an exact Python int even when it
    far exceeds 2**64.
    """
    return math.prod(ctx.d)
