"""Lazy enumeration of all maximal clique-partitions.

The search walks a tree whose depth-t branching picks, for the t-th
shared vertex, the single clique of the cover it will remain in; every
other clique containing it drops the vertex. Two pruning tests cut the
tree so that each maximal clique-partition is reached from exactly one
surviving leaf: one kills branches that can only yield non-maximal
partitions, the other kills branches whose partitions would also appear
under a lexicographically earlier set of choices.

State is kept as one component-table snapshot per depth, so stepping to
a sibling branch restores the parent state by construction rather than
by undo logic.
"""
from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from . import _kernels as _K
from .cover import CoverContext, cliques_of_set, cover_context
from .graph import Graph, VertexSet, _nwords


@dataclass(frozen=True)
class Configuration:
    """A component table: position i holds a subset of cover clique i."""

    components: tuple[VertexSet, ...]

    def component(self, i: int) -> VertexSet:
        """Component at 1-based cover position i."""
        if not 1 <= i <= len(self.components):
            raise ValueError(f"position {i} out of range 1..{len(self.components)}")
        return self.components[i - 1]

    def __len__(self) -> int:
        return len(self.components)


@dataclass(frozen=True)
class Partition:
    """Canonical value form of a clique-partition.

    Blocks are ascending vertex-id tuples, ordered by their smallest
    member; equal partitions compare and hash equal regardless of how
    they were produced.
    """

    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]]) -> "Partition":
        canon = []
        for b in blocks:
            t = tuple(sorted({int(v) for v in b}))
            if not t:
                raise ValueError("empty block in partition")
            canon.append(t)
        canon.sort()
        return cls(tuple(canon))

    def labels(self, g: Graph) -> list[list[str]]:
        return [[g.label(v) for v in b] for b in self.blocks]

    def json_line(self, g: Graph) -> str:
        return json.dumps(self.labels(g), separators=(",", ":"))

    def __len__(self) -> int:
        return len(self.blocks)


def initial_configuration(ctx: CoverContext) -> Configuration:
    """The root configuration: every component is its full cover clique."""
    return Configuration(tuple(ctx.cliques))


def apply_decision(ctx: CoverContext, cfg: Configuration, v: int, i: int) -> Configuration:
    """Pin vertex v to position i: every other component drops v.

    v must currently be a member of component i.
    """
    if len(cfg) != ctx.m:
        raise ValueError("configuration does not match the cover")
    if not 1 <= i <= ctx.m:
        raise ValueError(f"position {i} out of range 1..{ctx.m}")
    if v not in cfg.component(i):
        raise ValueError(
            f"vertex {ctx.graph.label(v)} is not in component {i}"
        )
    parts = tuple(
        comp if pos == i else comp.without(v)
        for pos, comp in enumerate(cfg.components, 1)
    )
    return Configuration(parts)


def to_partition(cfg: Configuration) -> Partition:
    """Forget positions: the nonempty components as a canonical Partition."""
    return Partition.from_blocks(tuple(c) for c in cfg.components if c)


def is_t1_or_t2(ctx: CoverContext, cfg: Configuration, decisions: Iterable[int]) -> bool:
    """Dead-branch test for the node reached by the given decisions.

    decisions[t] is the 1-based position chosen for the t-th shared
    vertex; cfg must be the configuration after applying them in order.
    True means the subtree holds no partition that is both maximal and
    new, so the search may skip it.
    """
    decisions = [int(i) for i in decisions]
    if not decisions:
        raise ValueError("at least one decision is required")
    if len(decisions) > len(ctx.shared):
        raise ValueError("more decisions than shared vertices")
    if len(cfg) != ctx.m:
        raise ValueError("configuration does not match the cover")
    for t, i in enumerate(decisions):
        if i not in ctx.cliques_of[ctx.shared[t]]:
            raise ValueError(
                f"decision {t + 1} picks position {i}, which does not "
                f"contain vertex {ctx.graph.label(ctx.shared[t])}"
            )
    v = ctx.shared[len(decisions) - 1]
    chosen = frozenset(decisions) - ctx.rigid
    touched = sorted(chosen & ctx.cliques_of[v])
    for j in touched:
        cj = cfg.component(j)
        if not cj:
            raise ValueError(f"component {j} is empty at a chosen position")
        pj = cliques_of_set(ctx, cj)
        if pj & ctx.rigid:
            return True
        if any(i > j for i in pj):
            return True
        for i in sorted(chosen):
            if i == j or (i < j and i in ctx.cliques_of[v]):
                continue
            ci = cfg.component(i)
            if not ci:
                raise ValueError(f"component {i} is empty at a chosen position")
            if cliques_of_set(ctx, ci) & pj:
                return True
    return False


@dataclass(frozen=True)
class _Packed:
    """CoverContext lowered to the flat arrays the kernels consume."""

    s: int
    m: int
    n: int
    wn: int
    wm: int
    shared: np.ndarray
    cand_offs: np.ndarray
    cand_idx: np.ndarray
    cliques_of: np.ndarray
    rgd: np.ndarray
    high: np.ndarray
    cfg0: np.ndarray
    fcfg0: np.ndarray


def _pack(ctx: CoverContext) -> _Packed:
    g = ctx.graph
    n, m = g.n, ctx.m
    wn, wm = _nwords(n), _nwords(m)
    one = np.uint64(1)
    cliques_of = np.zeros((n, wm), dtype=np.uint64)
    for v in range(n):
        for i in ctx.cliques_of[v]:
            cliques_of[v, (i - 1) >> 6] |= one << np.uint64((i - 1) & 63)
    rgd = np.zeros(wm, dtype=np.uint64)
    for i in ctx.rigid:
        rgd[(i - 1) >> 6] |= one << np.uint64((i - 1) & 63)
    high = np.zeros((m, wm), dtype=np.uint64)
    for j in range(m):
        for i in range(j + 1, m):
            high[j, i >> 6] |= one << np.uint64(i & 63)
    cfg0 = np.zeros((m, wn), dtype=np.uint64)
    for pos, c in enumerate(ctx.cliques):
        cfg0[pos] = c.words
    fcfg0 = np.zeros((m, wm), dtype=np.uint64)
    for pos in range(m):
        _K._fold_cliques_of(fcfg0[pos], cfg0[pos], cliques_of)
    shared = np.asarray(ctx.shared, dtype=np.int64).reshape(len(ctx.shared))
    offs = [0]
    idx: list[int] = []
    for v in ctx.shared:
        idx.extend(sorted(i - 1 for i in ctx.cliques_of[v]))
        offs.append(len(idx))
    return _Packed(
        s=len(ctx.shared),
        m=m,
        n=n,
        wn=wn,
        wm=wm,
        shared=shared,
        cand_offs=np.asarray(offs, dtype=np.int64),
        cand_idx=np.asarray(idx, dtype=np.int64),
        cliques_of=cliques_of,
        rgd=rgd,
        high=high,
        cfg0=cfg0,
        fcfg0=fcfg0,
    )


def _row_ids(row: np.ndarray, n: int) -> list[int]:
    bits = np.unpackbits(row.view(np.uint8), bitorder="little")
    return np.flatnonzero(bits[:n]).tolist()


class EnumState:
    """Resumable cursor over the surviving leaves of the search tree.

    Answers are produced one at a time; between calls the full walk
    position is retained, so a caller that stops early pays nothing for
    the partitions it never asked for.
    """

    def __init__(self, ctx: CoverContext):
        self.ctx = ctx
        pk = _pack(ctx)
        self._pk = pk
        self.emitted = 0
        if pk.s == 0:
            # no shared vertices: the cover itself is the one partition
            self._trivial_left = ctx.graph.n > 0
            self._snaps = None
            self._pending = False
            return
        self._trivial_left = False
        self._snaps = np.zeros((pk.s + 1, pk.m, pk.wn), dtype=np.uint64)
        self._snaps[0] = pk.cfg0
        self._fsnaps = np.zeros((pk.s + 1, pk.m, pk.wm), dtype=np.uint64)
        self._fsnaps[0] = pk.fcfg0
        self._choice = np.full(pk.s, -1, dtype=np.int64)
        self._cursor = np.zeros(1, dtype=np.int64)
        self._iw = np.zeros(pk.wm, dtype=np.uint64)
        self._jw = np.zeros(pk.wm, dtype=np.uint64)
        self._pending = self._advance()

    def _advance(self) -> bool:
        pk = self._pk
        return bool(
            _K._advance(
                self._snaps,
                self._fsnaps,
                self._choice,
                self._cursor,
                0,
                pk.shared,
                pk.cand_offs,
                pk.cand_idx,
                pk.cliques_of,
                pk.rgd,
                pk.high,
                self._iw,
                self._jw,
            )
        )

    def has_next(self) -> bool:
        return self._trivial_left or self._pending

    @property
    def finished(self) -> bool:
        return not self.has_next()

    @property
    def choices(self) -> tuple[int, ...]:
        """Current decision path as 1-based positions; 0 = unassigned."""
        if self._pk.s == 0:
            return ()
        return tuple(int(c) + 1 for c in self._choice)

    def _final_rows(self) -> np.ndarray:
        return self._pk.cfg0 if self._pk.s == 0 else self._snaps[self._pk.s]

    def peek_configuration(self) -> Configuration | None:
        """Configuration behind the answer next_partition() would return."""
        if not self.has_next():
            return None
        rows = self._final_rows()
        n = self.ctx.graph.n
        comps = tuple(
            VertexSet._from_words(n, rows[r].copy()) for r in range(self._pk.m)
        )
        return Configuration(comps)

    def next_partition(self) -> Partition | None:
        """The next maximal clique-partition, or None when exhausted."""
        if not self.has_next():
            return None
        rows = self._final_rows()
        n = self.ctx.graph.n
        blocks = []
        for r in range(self._pk.m):
            ids = _row_ids(rows[r], n)
            if ids:
                blocks.append(tuple(ids))
        if self._pk.s == 0:
            self._trivial_left = False
        else:
            self._pending = self._advance()
        self.emitted += 1
        return Partition.from_blocks(blocks)


def _as_context(x: Graph | CoverContext) -> CoverContext:
    return x if isinstance(x, CoverContext) else cover_context(x)


def init_search(x: Graph | CoverContext) -> EnumState:
    return EnumState(_as_context(x))


def has_next(state: EnumState) -> bool:
    return state.has_next()


def next_partition(state: EnumState) -> Partition | None:
    return state.next_partition()


def iter_partitions(
    x: Graph | CoverContext, limit: int | None = None
) -> Iterator[Partition]:
    """Yield maximal clique-partitions lazily, optionally at most `limit`."""
    if limit is not None and limit <= 0:
        return
    state = init_search(x)
    produced = 0
    while state.has_next():
        p = state.next_partition()
        assert p is not None
        yield p
        produced += 1
        if limit is not None and produced >= limit:
            return


def _fresh_scratch(pk: _Packed):
    return tuple(np.zeros(pk.wm, dtype=np.uint64) for _ in range(2))


def count_partitions(x: Graph | CoverContext, parallel: bool = False) -> int:
    """Total number of maximal clique-partitions, without materializing them.

    parallel=True splits the top-level branches across threads; the
    kernels release the GIL, so this scales with cores when the tree is
    wide enough. Results are identical either way.
    """
    ctx = _as_context(x)
    pk = _pack(ctx)
    if pk.s == 0:
        return 1 if ctx.graph.n > 0 else 0
    if not parallel:
        snaps = np.zeros((pk.s + 1, pk.m, pk.wn), dtype=np.uint64)
        snaps[0] = pk.cfg0
        fsnaps = np.zeros((pk.s + 1, pk.m, pk.wm), dtype=np.uint64)
        fsnaps[0] = pk.fcfg0
        choice = np.full(pk.s, -1, dtype=np.int64)
        cursor = np.zeros(1, dtype=np.int64)
        iw, jw = _fresh_scratch(pk)
        return int(
            _K._count_from(
                snaps, fsnaps, choice, cursor, 0,
                pk.shared, pk.cand_offs, pk.cand_idx,
                pk.cliques_of, pk.rgd, pk.high,
                iw, jw,
            )
        )

    v0 = int(pk.shared[0])
    iw, jw = _fresh_scratch(pk)
    total = 0
    jobs = []
    for p in range(int(pk.cand_offs[0]), int(pk.cand_offs[1])):
        k = int(pk.cand_idx[p])
        if not _K._bit(pk.rgd, k) and _K._intersects(pk.fcfg0[k], pk.rgd):
            continue
        snaps = np.zeros((pk.s + 1, pk.m, pk.wn), dtype=np.uint64)
        snaps[0] = pk.cfg0
        snaps[1] = pk.cfg0
        fsnaps = np.zeros((pk.s + 1, pk.m, pk.wm), dtype=np.uint64)
        fsnaps[0] = pk.fcfg0
        fsnaps[1] = pk.fcfg0
        for q in range(int(pk.cand_offs[0]), int(pk.cand_offs[1])):
            k2 = int(pk.cand_idx[q])
            if k2 != k:
                _K._clear_bit(snaps[1, k2], v0)
                _K._fold_cliques_of(fsnaps[1, k2], snaps[1, k2], pk.cliques_of)
        choice = np.full(pk.s, -1, dtype=np.int64)
        choice[0] = k
        if _K._is_t1_or_t2(
            fsnaps[1], choice, 0, v0,
            pk.cliques_of, pk.rgd, pk.high, iw, jw,
        ):
            continue
        if pk.s == 1:
            total += 1
            continue
        cursor = np.ones(1, dtype=np.int64)
        jobs.append((snaps, fsnaps, choice, cursor))

    def run(job):
        snaps, fsnaps, choice, cursor = job
        siw, sjw = _fresh_scratch(pk)
        return int(
            _K._count_from(
                snaps, fsnaps, choice, cursor, 1,
                pk.shared, pk.cand_offs, pk.cand_idx,
                pk.cliques_of, pk.rgd, pk.high,
                siw, sjw,
            )
        )

    if jobs:
        workers = min(len(jobs), os.cpu_count() or 1)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            total += sum(pool.map(run, jobs))
    return total
