"""Benchmark graph families with known partition counts.

Each generator returns a plain Graph; the interesting structure (what
the maximal cliques are, which vertices are shared) falls out of the
edge sets.
"""
from __future__ import annotations

import itertools

from .graph import Graph


def gen_gn(n: int) -> Graph:
    """Complete core on n vertices, one pendant hanging off each.

    Vertices 0..n-1 form K_n; vertex n+i is adjacent only to i. Has
    exactly 2**n - n maximal clique-partitions.
    """
    if n < 2:
        raise ValueError("gn requires n >= 2")
    edges = list(itertools.combinations(range(n), 2))
    edges += [(i, n + i) for i in range(n)]
    return Graph.from_edges(2 * n, edges)


def gen_hn(n: int) -> Graph:
    """Three overlapping cliques of size 2n in a chain.

    Vertices 0..4n-1; cliques {0..2n-1}, {n..3n-1} and {2n..4n-1}, each
    overlapping the next in n vertices. The middle clique has no private
    vertex, so it is the one position the search may legally empty out.
    """
    if n < 2:
        raise ValueError("hn requires n >= 2")
    blocks = [range(0, 2 * n), range(n, 3 * n), range(2 * n, 4 * n)]
    edges = []
    for b in blocks:
        edges += itertools.combinations(b, 2)
    return Graph.from_edges(4 * n, edges)


def gen_gmn(m: int, n: int) -> Graph:
    """Sliding-window graph: n windows of m consecutive vertices.

    Vertices 0..m+n-2, with u ~ v exactly when 0 < |u - v| < m; the
    maximal cliques are the n windows {i..i+m-1}, i = 0..n-1.
    """
    if m < 2:
        raise ValueError("gmn requires m >= 2")
    if n < 2:
        raise ValueError("gmn requires n >= 2")
    total = m + n - 1
    edges = [
        (u, v)
        for u in range(total)
        for v in range(u + 1, min(u + m, total))
    ]
    return Graph.from_edges(total, edges)


def gen_two_clique(n: int) -> Graph:
    """K_{n+2} minus one edge: propositions p1..pn plus 'true'/'false'.

    Every proposition is adjacent to everything; 'true' and 'false' are
    not adjacent to each other. The two maximal cliques overlap in all n
    propositions, giving exactly 2**n maximal clique-partitions.
    """
    if n < 1:
        raise ValueError("two_clique requires n >= 1")
    t, f = n, n + 1
    edges = list(itertools.combinations(range(n), 2))
    edges += [(i, t) for i in range(n)]
    edges += [(i, f) for i in range(n)]
    labels = [f"p{i + 1}" for i in range(n)] + ["true", "false"]
    return Graph.from_edges(n + 2, edges, labels)


def parse_family(spec: str) -> Graph:
    """Build a family instance from a spec string.

    Accepted forms: gn:<n>, hn:<n>, gmn:<m>,<n>, twoclique:<n>.
    """
    name, sep, rest = spec.partition(":")
    if not sep:
        raise ValueError(f"family spec {spec!r} is missing ':<params>'")
    try:
        params = [int(p) for p in rest.split(",")] if rest else []
    except ValueError:
        raise ValueError(f"family spec {spec!r} has non-integer parameters") from None
    if name == "gn" and len(params) == 1:
        return gen_gn(params[0])
    if name == "hn" and len(params) == 1:
        return gen_hn(params[0])
    if name == "gmn" and len(params) == 2:
        return gen_gmn(params[0], params[1])
    if name == "twoclique" and len(params) == 1:
        return gen_two_clique(params[0])
    raise ValueError(
        f"unknown family spec {spec!r}; expected gn:<n>, hn:<n>, "
        f"gmn:<m>,<n> or twoclique:<n>"
    )
