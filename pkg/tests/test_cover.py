import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import cliquepart as cp

from conftest import brute_maximal_cliques, random_graph, vs
from test_graph import graphs


def clique_label_sets(g, cliques):
    return {frozenset(g.label(v) for v in c) for c in cliques}


def test_maximal_cliques_example1(ex1):
    g, ctx = ex1
    assert clique_label_sets(g, ctx.cliques) == {
        frozenset({"x1", "x2", "x3"}),
        frozenset({"x1", "x4"}),
        frozenset({"x4", "x5"}),
        frozenset({"x4", "x6"}),
    }


def test_maximal_cliques_example2_order(ex2):
    g, ctx = ex2
    # canonical order sorts by ascending vertex-id lists
    assert [sorted(g.label(v) for v in c) for c in ctx.cliques] == [
        ["1", "2", "3"],
        ["2", "3", "4"],
        ["4", "5", "6"],
        ["5", "6", "7"],
    ]


def test_maximal_cliques_trivial_cases():
    k3 = cp.Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    assert [set(c) for c in cp.maximal_cliques(k3)] == [{0, 1, 2}]
    iso = cp.Graph.from_edges(3, [])
    assert [set(c) for c in cp.maximal_cliques(iso)] == [{0}, {1}, {2}]
    empty = cp.Graph.from_edges(0, [])
    assert cp.maximal_cliques(empty) == []


@settings(deadline=None, max_examples=150)
@given(graphs(max_n=8))
def test_maximal_cliques_match_brute_force(g):
    got = {frozenset(c) for c in cp.maximal_cliques(g)}
    assert got == brute_maximal_cliques(g)


def test_maximal_cliques_deterministic():
    rng = random.Random(7)
    for _ in range(20):
        g = random_graph(rng, 9, 0.5)
        a = [tuple(c) for c in cp.maximal_cliques(g)]
        b = [tuple(c) for c in cp.maximal_cliques(g)]
        assert a == b
        assert a == sorted(a)


def test_build_context_example2(ex2):
    g, ctx = ex2
    assert ctx.m == 4
    assert ctx.rigid == {1, 4}
    assert [g.label(v) for v in ctx.shared] == ["2", "3", "4", "5", "6"]
    assert ctx.d[g.id_of("1")] == 1
    assert ctx.d[g.id_of("7")] == 1
    assert all(ctx.d[g.id_of(str(x))] == 2 for x in range(2, 7))


def test_build_context_example1(ex1):
    g, ctx = ex1
    assert ctx.cliques_of[g.id_of("x1")] == {1, 2}
    assert ctx.cliques_of[g.id_of("x4")] == {2, 3, 4}
    assert {g.label(v) for v in ctx.shared} == {"x1", "x4"}
    assert ctx.rigid == {1, 3, 4}


def test_build_context_k3():
    g = cp.Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    ctx = cp.cover_context(g)
    assert ctx.m == 1
    assert ctx.rigid == {1}
    assert ctx.shared == ()


def test_build_context_rejects_uncovered_vertex():
    g = cp.Graph.from_edges(3, [(0, 1)])
    cliques = cp.maximal_cliques(g)
    with pytest.raises(ValueError, match="not covered"):
        cp.build_cover_context(g, cliques[:1])


def test_build_context_rejects_non_clique():
    g = cp.Graph.from_edges(3, [(0, 1), (1, 2)])
    with pytest.raises(ValueError, match="not a clique"):
        cp.build_cover_context(g, [cp.VertexSet(3, [0, 1, 2])])


def test_build_context_shared_order_validation(ex2):
    g, _ = ex2
    cliques = cp.maximal_cliques(g)
    order = [g.id_of(str(x)) for x in (6, 5, 4, 3, 2)]
    ctx = cp.build_cover_context(g, cliques, shared_order=order)
    assert list(ctx.shared) == order
    with pytest.raises(ValueError):
        cp.build_cover_context(g, cliques, shared_order=order[:-1])
    with pytest.raises(ValueError):
        cp.build_cover_context(g, cliques, shared_order=order[:-1] + [g.id_of("1")])


def test_cliques_of_set_examples(ex2):
    g, ctx = ex2
    assert cp.cliques_of_set(ctx, vs(g, ["2", "3"])) == {1, 2}
    assert cp.cliques_of_set(ctx, vs(g, ["1", "7"])) == set()
    v = g.id_of("4")
    assert cp.cliques_of_set(ctx, [v]) == ctx.cliques_of[v]
    with pytest.raises(ValueError):
        cp.cliques_of_set(ctx, [])


def test_cliques_of_set_empty_iff_not_clique(ex2):
    g, ctx = ex2
    rng = random.Random(3)
    for _ in range(200):
        k = rng.randint(1, 4)
        members = rng.sample(range(g.n), k)
        empty = cp.cliques_of_set(ctx, members) == set()
        assert empty == (not cp.is_clique(g, members))


def test_count_upper_bound(ex2):
    _, ctx = ex2
    assert cp.count_upper_bound(ctx) == 32
    k3 = cp.cover_context(cp.Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)]))
    assert cp.count_upper_bound(k3) == 1
    for n in (3, 30, 200):
        two = cp.cover_context(cp.gen_two_clique(n))
        assert cp.count_upper_bound(two) == 2 ** n  # arbitrary precision


@settings(deadline=None, max_examples=100)
@given(graphs(max_n=8))
def test_rigid_and_shared_consistency(g):
    if g.n == 0:
        return
    ctx = cp.cover_context(g)
    union = set()
    for c in ctx.cliques:
        union |= set(c)
    assert union == set(range(g.n))
    for v in range(g.n):
        assert ctx.d[v] == len(ctx.cliques_of[v]) >= 1
        for i in ctx.cliques_of[v]:
            assert v in ctx.cliques[i - 1]
    assert all(ctx.d[v] > 1 for v in ctx.shared)
    assert len(set(ctx.shared)) == len(ctx.shared)
    witnesses = {next(iter(s)) for s in ctx.cliques_of if len(s) == 1}
    assert ctx.rigid == witnesses
    multi = {v for v in range(g.n) if ctx.d[v] > 1}
    assert set(ctx.shared) == multi
