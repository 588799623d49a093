from __future__ import annotations

import importlib.util
import itertools
import os
import random

import pytest

import cliquepart as cp

EX1_TEXT = "x1 x2\nx2 x3\nx1 x3\nx1 x4\nx4 x5\nx4 x6\n"
EX2_TEXT = "1 2\n1 3\n2 3\n2 4\n3 4\n4 5\n4 6\n5 6\n5 7\n6 7\n"


def pytest_addoption(parser):
    parser.addoption(
        "--full-tables",
        action="store_true",
        default=False,
        help="also run the two long-running benchmark table rows",
    )


@pytest.fixture(scope="session")
def ex1():
    g = cp.parse_edge_list(EX1_TEXT)
    return g, cp.cover_context(g)


@pytest.fixture(scope="session")
def ex2():
    g = cp.parse_edge_list(EX2_TEXT)
    return g, cp.cover_context(g)


def part_by_labels(g: cp.Graph, blocks) -> cp.Partition:
    """Partition from label-string blocks, e.g. [["x1","x2"],["x3"]]."""
    return cp.Partition.from_blocks(
        [[g.id_of(name) for name in b] for b in blocks]
    )


def vs(g: cp.Graph, labels) -> cp.VertexSet:
    return cp.VertexSet(g.n, [g.id_of(name) for name in labels])


def random_graph(rng: random.Random, n: int, density: float) -> cp.Graph:
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < density
    ]
    return cp.Graph.from_edges(n, edges)


def brute_maximal_cliques(g: cp.Graph) -> set[frozenset[int]]:
    """Definition-level maximal cliques; exponential, for tiny graphs."""
    cliques = [
        frozenset(combo)
        for r in range(1, g.n + 1)
        for combo in itertools.combinations(range(g.n), r)
        if all(v in g.adj[u] for u, v in itertools.combinations(combo, 2))
    ]
    return {c for c in cliques if not any(c < d for d in cliques)}


def drain(ctx_or_graph) -> list[cp.Partition]:
    return list(cp.iter_partitions(ctx_or_graph))


def shuffled_context(g: cp.Graph, rng: random.Random) -> cp.CoverContext:
    """CoverContext with randomly permuted clique order and S order."""
    cliques = cp.maximal_cliques(g)
    rng.shuffle(cliques)
    base = cp.build_cover_context(g, cliques)
    shared = list(base.shared)
    rng.shuffle(shared)
    return cp.build_cover_context(g, cliques, shared_order=shared)


def load_kernels(backend: str):
    """Import a fresh copy of the kernel module pinned to a backend."""
    from cliquepart import _kernels

    old = os.environ.get("CLIQUEPART_BACKEND")
    os.environ["CLIQUEPART_BACKEND"] = backend
    try:
        spec = importlib.util.spec_from_file_location(
            f"cliquepart._kernels_{backend}", _kernels.__file__
        )
        mod = importlib.util.module_from_spec(spec)
        spec.loader.exec_module(mod)
    finally:
        if old is None:
            os.environ.pop("CLIQUEPART_BACKEND", None)
        else:
            os.environ["CLIQUEPART_BACKEND"] = old
    return mod
