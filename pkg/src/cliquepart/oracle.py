"""Brute-force ground truth for maximal clique-partitions.

Deliberately shares nothing with the search kernels: leaves are
materialized directly from exhaustive clique assignments and filtered by
the definition of maximality, so agreement with the lazy enumerator is
meaningful evidence rather than a tautology.
"""
from __future__ import annotations

import itertools
import math

from .cover import CoverContext
from .graph import Graph, VertexSet, is_clique
from .search import Partition

DEFAULT_LEAF_CAP = 1 << 24


class OracleLimitError(RuntimeError):
    """The exhaustive walk would exceed the configured leaf budget."""


def is_maximal_partition(g: Graph, blocks) -> bool:
    """Check the definition directly.

    True iff `blocks` is a partition of the vertex set into cliques such
    that no two blocks can be merged into a single clique. Accepts a
    Partition or any iterable of vertex-id iterables.
    """
    if isinstance(blocks, Partition):
        parts = [list(b) for b in blocks.blocks]
    else:
        parts = [list(b) for b in blocks]
    sets = []
    for b in parts:
        vs = VertexSet(g.n, b)
        if not vs:
            return False
        sets.append(vs)
    seen = VertexSet(g.n)
    for vs in sets:
        if not seen.isdisjoint(vs):
            return False
        seen = seen | vs
    if len(seen) != g.n:
        return False
    for vs in sets:
        if not is_clique(g, vs):
            return False
    for a in range(len(sets)):
        for b in range(a + 1, len(sets)):
            if is_clique(g, sets[a] | sets[b]):
                return False
    return True


def brute_force_all_partitions(
    ctx: CoverContext, max_leaves: int = DEFAULT_LEAF_CAP
) -> set[Partition]:
    """Every maximal clique-partition, by exhaustion over all leaves.

    Walks all ways of pinning each shared vertex to one of its cliques,
    dedupes the resulting leaf configurations, and keeps those that
    satisfy is_maximal_partition. Raises OracleLimitError when the leaf
    count prod(d(v) for shared v) exceeds max_leaves.
    """
    g = ctx.graph
    if g.n == 0:
        return set()
    leaf_total = math.prod(ctx.d[v] for v in ctx.shared)
    if leaf_total > max_leaves:
        raise OracleLimitError(
            f"{leaf_total} leaves exceed the budget of {max_leaves}"
        )
    fixed: list[list[int]] = [[] for _ in range(ctx.m)]
    for v in range(g.n):
        if ctx.d[v] == 1:
            (i,) = ctx.cliques_of[v]
            fixed[i - 1].append(v)
    options: list[list[tuple[int, int]]] = [
        [(v, i) for i in sorted(ctx.cliques_of[v])] for v in ctx.shared
    ]
    seen: set[tuple[tuple[int, ...], ...]] = set()
    for combo in itertools.product(*options):
        comps = [list(b) for b in fixed]
        for v, i in combo:
            comps[i - 1].append(v)
        # append order is a function of block membership alone (fixed
        # part first, then shared members in ctx.shared order), so equal
        # block sets always produce equal tuples and the set dedupes
        # leaves without sorting each block here
        seen.add(tuple(sorted(tuple(c) for c in comps if c)))
    return {
        Partition.from_blocks(key)
        for key in seen
        if is_maximal_partition(g, key)
    }
