"""Immutable undirected graphs over dense integer vertex ids.

Vertices are ids 0..n-1; external names live in a parallel label table so
that parsing and serialization can round-trip arbitrary token names while
the algorithms stay on integers.
"""
from __future__ import annotations

from typing import Iterable, Iterator

import numpy as np

_WORD = 64


class ParseError(ValueError):
    """Malformed graph input (bad token, self-loop, out-of-range id, ...)."""


def _nwords(nbits: int) -> int:
    return max(1, (nbits + _WORD - 1) // _WORD)


class VertexSet:
    """Immutable vertex set backed by a fixed-width 64-bit word vector.

    The width is fixed at construction to the owning graph's vertex count,
    so sets from the same graph can be combined word-by-word without any
    resizing logic.
    """

    __slots__ = ("nbits", "words")

    def __init__(self, nbits: int, members: Iterable[int] = ()):
        if nbits < 0:
            raise ValueError("nbits must be >= 0")
        words = np.zeros(_nwords(nbits), dtype=np.uint64)
        one = np.uint64(1)
        for v in members:
            v = int(v)
            if not 0 <= v < nbits:
                raise ValueError(f"vertex id {v} out of range [0, {nbits})")
            words[v >> 6] |= one << np.uint64(v & 63)
        words.setflags(write=False)
        object.__setattr__(self, "nbits", nbits)
        object.__setattr__(self, "words", words)

    def __setattr__(self, name, value):
        raise AttributeError("VertexSet is immutable")

    @classmethod
    def _from_words(cls, nbits: int, words: np.ndarray) -> "VertexSet":
        out = cls.__new__(cls)
        words = np.ascontiguousarray(words, dtype=np.uint64)
        words.setflags(write=False)
        object.__setattr__(out, "nbits", nbits)
        object.__setattr__(out, "words", words)
        return out

    def __contains__(self, v: int) -> bool:
        if not 0 <= v < self.nbits:
            return False
        return bool((self.words[v >> 6] >> np.uint64(v & 63)) & np.uint64(1))

    def __iter__(self) -> Iterator[int]:
        bits = np.unpackbits(self.words.view(np.uint8), bitorder="little")
        return iter(np.flatnonzero(bits[: self.nbits]).tolist())

    def __len__(self) -> int:
        return int(np.bitwise_count(self.words).sum())

    def __bool__(self) -> bool:
        return bool(self.words.any())

    def __eq__(self, other) -> bool:
        if not isinstance(other, VertexSet):
            return NotImplemented
        return self.nbits == other.nbits and bool(
            np.array_equal(self.words, other.words)
        )

    def __hash__(self) -> int:
        return hash((self.nbits, self.words.tobytes()))

    def _check_width(self, other: "VertexSet") -> None:
        if self.nbits != other.nbits:
            raise ValueError("VertexSet width mismatch")

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check_width(other)
        return VertexSet._from_words(self.nbits, self.words & other.words)

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check_width(other)
        return VertexSet._from_words(self.nbits, self.words | other.words)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._check_width(other)
        return VertexSet._from_words(self.nbits, self.words & ~other.words)

    def without(self, v: int) -> "VertexSet":
        """Copy of this set with vertex v removed (v need not be present)."""
        if not 0 <= v < self.nbits:
            raise ValueError(f"vertex id {v} out of range [0, {self.nbits})")
        words = self.words.copy()
        words[v >> 6] &= ~(np.uint64(1) << np.uint64(v & 63))
        return VertexSet._from_words(self.nbits, words)

    def isdisjoint(self, other: "VertexSet") -> bool:
        self._check_width(other)
        return not bool((self.words & other.words).any())

    def issubset(self, other: "VertexSet") -> bool:
        self._check_width(other)
        return not bool((self.words & ~other.words).any())

    def __repr__(self) -> str:
        return f"VertexSet({{{', '.join(map(str, self))}}})"


class Graph:
    """Frozen undirected simple graph.

    adj[v] is the VertexSet of neighbors of v; labels[v] is the external
    name of v (defaults to str(v)). The constructor validates symmetry and
    rejects self-loops so every Graph instance is a simple graph.
    """

    __slots__ = ("n", "adj", "labels", "_label_to_id")

    def __init__(
        self,
        n: int,
        adj: Iterable[VertexSet],
        labels: Iterable[str] | None = None,
    ):
        adj = tuple(adj)
        if n < 0:
            raise ValueError("vertex count must be >= 0")
        if len(adj) != n:
            raise ValueError(f"expected {n} adjacency sets, got {len(adj)}")
        for v, nb in enumerate(adj):
            if not isinstance(nb, VertexSet) or nb.nbits != n:
                raise ValueError(f"adjacency of vertex {v} has wrong width")
            if v in nb:
                raise ValueError(f"self-loop at vertex {v}")
            for u in nb:
                if v not in adj[u]:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
        if labels is None:
            labels = tuple(str(v) for v in range(n))
        else:
            labels = tuple(labels)
            if len(labels) != n:
                raise ValueError(f"expected {n} labels, got {len(labels)}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_label_to_id", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Iterable[str] | None = None,
    ) -> "Graph":
        """Build a graph from (u, v) pairs; duplicates collapse, order is free."""
        rows = np.zeros((n, _nwords(n)), dtype=np.uint64)
        one = np.uint64(1)
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range [0, {n})")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u, v >> 6] |= one << np.uint64(v & 63)
            rows[v, u >> 6] |= one << np.uint64(u & 63)
        adj = [VertexSet._from_words(n, rows[v]) for v in range(n)]
        return cls(n, adj, labels)

    def label(self, v: int) -> str:
        return self.labels[v]

    def id_of(self, label: str) -> int:
        """Vertex id carrying the given label; KeyError if absent."""
        lut = self._label_to_id
        if lut is None:
            lut = {name: v for v, name in enumerate(self.labels)}
            object.__setattr__(self, "_label_to_id", lut)
        return lut[label]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, sorted."""
        out = []
        for v in range(self.n):
            for u in self.adj[v]:
                if u > v:
                    out.append((v, u))
        out.sort()
        return out

    def edge_count(self) -> int:
        return sum(len(nb) for nb in self.adj) // 2

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and self.labels == other.labels
            and self.adj == other.adj
        )

    def __hash__(self) -> int:
        return hash((self.n, self.labels, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count()})"


def is_clique(g: Graph, vertices) -> bool:
    """True iff the given nonempty vertex set induces a complete subgraph.

    Raises ValueError on an empty set; a singleton is a clique.
    """
    if isinstance(vertices, VertexSet):
        if vertices.nbits != g.n:
            raise ValueError("VertexSet width mismatch")
        vs = vertices
    else:
        vs = VertexSet(g.n, vertices)
    if not vs:
        raise ValueError("is_clique is undefined for the empty set")
    for v in vs:
        # every other member must be a neighbor of v
        rem = vs.words & ~g.adj[v].words
        rem[v >> 6] &= ~(np.uint64(1) << np.uint64(v & 63))
        if rem.any():
            return False
    return True


def parse_edge_list(text: str) -> Graph:
    """Parse the whitespace edge-list format.

    Each non-blank, non-'#' line is either "u v" (an edge) or a single
    token (declares an isolated-or-not vertex). Vertex ids are assigned by
    first appearance; original tokens are kept as labels.
    """
    label_to_id: dict[str, int] = {}
    order: list[str] = []
    edges: list[tuple[int, int]] = []

    def vid(tok: str) -> int:
        i = label_to_id.get(tok)
        if i is None:
            i = len(order)
            label_to_id[tok] = i
            order.append(tok)
        return i

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if len(toks) == 1:
            vid(toks[0])
        elif len(toks) == 2:
            if toks[0] == toks[1]:
                raise ParseError(f"line {lineno}: self-loop '{toks[0]} {toks[1]}'")
            edges.append((vid(toks[0]), vid(toks[1])))
        else:
            raise ParseError(
                f"line {lineno}: expected 1 or 2 tokens, got {len(toks)}"
            )
    return Graph.from_edges(len(order), edges, order)


def parse_dimacs(text: str) -> Graph:
    """Parse DIMACS: 'c' comments, one 'p edge n m' header, 'e u v' 1-based."""
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        toks = line.split()
        if toks[0] == "c":
            continue
        if toks[0] == "p":
            if n is not None:
                raise ParseError(f"line {lineno}: duplicate problem line")
            if len(toks) != 4:
                raise ParseError(f"line {lineno}: malformed problem line")
            try:
                n = int(toks[2])
                int(toks[3])
            except ValueError:
                raise ParseError(f"line {lineno}: non-integer counts") from None
            if n < 0:
                raise ParseError(f"line {lineno}: negative vertex count")
        elif toks[0] == "e":
            if n is None:
                raise ParseError(f"line {lineno}: edge before problem line")
            if len(toks) != 3:
                raise ParseError(f"line {lineno}: malformed edge line")
            try:
                u, v = int(toks[1]), int(toks[2])
            except ValueError:
                raise ParseError(f"line {lineno}: non-integer endpoint") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(
                    f"line {lineno}: endpoint out of range 1..{n}"
                )
            if u == v:
                raise ParseError(f"line {lineno}: self-loop at {u}")
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"line {lineno}: unknown line type '{toks[0]}'")
    if n is None:
        raise ParseError("missing problem line")
    return Graph.from_edges(n, edges, (str(v) for v in range(1, n + 1)))


def _checked_labels(g: Graph) -> tuple[str, ...]:
    seen = set()
    for name in g.labels:
        if not name or name.split() != [name]:
            raise ValueError(f"label {name!r} is not a single token")
        if name.startswith("#"):
            raise ValueError(f"label {name!r} would read as a comment")
        if name in seen:
            raise ValueError(f"duplicate label {name!r}")
        seen.add(name)
    return g.labels


def to_edge_list(g: Graph) -> str:
    """Serialize to the edge-list format; parse_edge_list round-trips it.

    Every vertex is declared on its own line first (in id order) so that
    isolated vertices survive and ids are reassigned identically on
    re-parse; edges follow sorted by (min id, max id).
    """
    labels = _checked_labels(g)
    lines = list(labels)
    for u, v in g.edges():
        lines.append(f"{labels[u]} {labels[v]}")
    return "\n".join(lines) + ("\n" if lines else "")


def to_dimacs(g: Graph) -> str:
    """Serialize to DIMACS; labels are dropped (format is positional)."""
    lines = [f"p edge {g.n} {g.edge_count()}"]
    for u, v in g.edges():
        lines.append(f"e {u + 1} {v + 1}")
    return "\n".join(lines) + "\n"
