"""Simple undirected graphs with dense-bitset or sorted-adjacency storage.

Graphs are immutable after construction: every mutating operation
(neighborhood deletion, complementation) returns a new Graph, so instances
are safe to share across threads.

Two storage backends with identical semantics:

* ``bitset`` — one Python int per vertex holding its neighbor bits; the
  default whenever n*n bits fit the memory budget.  All set operations are
  word-parallel int ops.
* ``sorted`` — CSR-style sorted neighbor arrays (numpy), used for large
  sparse graphs where an n x n bit matrix would not fit.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EmptyGraph, InvalidArgument, InvalidVertex, SelfLoopRejected

# Bitset rows are used while n*n bits stay under this budget (default 32 MiB).
DENSE_BIT_BUDGET = 2**28


def _iter_bits(mask: int):
    """Yield set bit positions of a Python int, ascending."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


@dataclass(frozen=True)
class VertexSet:
    """A subset of the vertices of a specific graph, stored as a bitmask."""

    mask: int
    n: int

    @classmethod
    def from_vertices(cls, n: int, vertices) -> "VertexSet":
        mask = 0
        for v in vertices:
            if not 0 <= v < n:
                raise InvalidVertex(f"vertex {v} not in [0, {n})")
            mask |= 1 << v
        return cls(mask, n)

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and (self.mask >> v) & 1 == 1

    def __len__(self) -> int:
        return self.mask.bit_count()

    def members(self) -> list[int]:
        return list(_iter_bits(self.mask))


class Graph:
    """Immutable simple undirected graph.

    Construct via :func:`build_graph` (or the readers in ``formats``); the
    constructor itself trusts its inputs.
    """

    __slots__ = ("n", "backend", "_rows", "_indptr", "_indices", "degrees")

    def __init__(self, n, backend, rows=None, indptr=None, indices=None):
        self.n = n
        self.backend = backend
        self._rows = rows
        self._indptr = indptr
        self._indices = indices
        if backend == "bitset":
            self.degrees = [r.bit_count() for r in rows]
        else:
            self.degrees = np.diff(indptr).astype(np.int64).tolist()

    # -- basic accessors -------------------------------------------------

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(self.degrees) // 2

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, (int, np.integer)) or not 0 <= v < self.n:
            raise InvalidVertex(f"vertex {v} not in [0, {self.n})")

    def has_edge(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        if self.backend == "bitset":
            return (self._rows[u] >> v) & 1 == 1
        lo, hi = self._indptr[u], self._indptr[u + 1]
        i = np.searchsorted(self._indices[lo:hi], v)
        return i < hi - lo and self._indices[lo + i] == v

    def neighbors(self, v: int) -> list[int]:
        """Sorted open neighborhood of v."""
        self.check_vertex(v)
        if self.backend == "bitset":
            return list(_iter_bits(self._rows[v]))
        return self._indices[self._indptr[v]:self._indptr[v + 1]].tolist()

    def neighbor_mask(self, v: int) -> int:
        """Open neighborhood of v as a bitmask."""
        self.check_vertex(v)
        if self.backend == "bitset":
            return self._rows[v]
        mask = 0
        for u in self._indices[self._indptr[v]:self._indptr[v + 1]]:
            mask |= 1 << int(u)
        return mask

    def edges(self):
        """Iterate edges (u, v) with u < v in lexicographic order."""
        if self.backend == "bitset":
            for u in range(self.n):
                for v in _iter_bits(self._rows[u] >> (u + 1)):
                    yield u, v + u + 1
        else:
            for u in range(self.n):
                row = self._indices[self._indptr[u]:self._indptr[u + 1]]
                for v in row[np.searchsorted(row, u + 1):]:
                    yield u, int(v)

    def edge_list(self) -> list[tuple[int, int]]:
        return list(self.edges())

    def edge_array(self) -> np.ndarray:
        """Edges as an (m, 2) int64 array with u < v, lexicographically sorted."""
        if self.backend == "sorted":
            heads = np.repeat(np.arange(self.n, dtype=np.int64), np.diff(self._indptr))
            fwd = heads < self._indices
            return np.stack([heads[fwd], self._indices[fwd]], axis=1)
        arr = np.array(self.edge_list(), np.int64)
        return arr.reshape(-1, 2)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edge_list() == other.edge_list()

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, backend={self.backend!r})"


def build_graph(n: int, edges, backend: str | None = None) -> Graph:
    """Build a Graph from an edge list; duplicate pairs are idempotent.

    ``edges`` may be any iterable of (u, v) pairs or an (m, 2) integer
    array.  Raises InvalidVertex for out-of-range endpoints and
    SelfLoopRejected for pairs (v, v).
    """
    if not isinstance(n, (int, np.integer)) or n < 0:
        raise InvalidArgument(f"vertex count must be a nonnegative integer, got {n!r}")
    n = int(n)
    if backend is None:
        backend = "bitset" if n * n <= DENSE_BIT_BUDGET else "sorted"
    if backend not in ("bitset", "sorted"):
        raise InvalidArgument(f"unknown backend {backend!r}")

    if backend == "bitset":
        rows = [0] * n
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidVertex(f"edge ({u}, {v}) endpoint not in [0, {n})")
            if u == v:
                raise SelfLoopRejected(f"self-loop ({u}, {u}) rejected")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(n, "bitset", rows=rows)

    if isinstance(edges, np.ndarray):
        arr = edges.astype(np.int64, copy=False).reshape(-1, 2)
    else:
        pairs = list(edges)
        arr = np.array(pairs, np.int64).reshape(-1, 2) if pairs else np.empty((0, 2), np.int64)
    if arr.size:
        if arr.min() < 0 or arr.max() >= n:
            bad = arr[(arr[:, 0] < 0) | (arr[:, 0] >= n) | (arr[:, 1] < 0) | (arr[:, 1] >= n)][0]
            raise InvalidVertex(f"edge ({bad[0]}, {bad[1]}) endpoint not in [0, {n})")
        loops = arr[:, 0] == arr[:, 1]
        if loops.any():
            v = int(arr[loops][0, 0])
            raise SelfLoopRejected(f"self-loop ({v}, {v}) rejected")
    return _sorted_graph_from_edges(n, arr)


def _sorted_graph_from_edges(n: int, arr: np.ndarray) -> Graph:
    """CSR build from a (possibly duplicated) validated edge array."""
    u = np.minimum(arr[:, 0], arr[:, 1])
    v = np.maximum(arr[:, 0], arr[:, 1])
    keys = np.unique(u * n + v) if u.size else np.empty(0, np.int64)
    eu, ev = keys // n, keys % n
    heads = np.concatenate([eu, ev])
    tails = np.concatenate([ev, eu])
    order = np.lexsort((tails, heads))
    indices = tails[order].astype(np.int64)
    counts = np.bincount(heads, minlength=n)
    indptr = np.concatenate([[0], np.cumsum(counts)]).astype(np.int64)
    return Graph(n, "sorted", indptr=indptr, indices=indices)


def closed_neighborhood(g: Graph, v: int) -> VertexSet:
    """N[v]: v together with its neighbors; |N[v]| = d(v) + 1."""
    g.check_vertex(v)
    return VertexSet(g.neighbor_mask(v) | (1 << v), g.n)


def delete_vertices(g: Graph, s: VertexSet) -> tuple[Graph, list[int]]:
    """Induced subgraph on V minus s, relabeled contiguously.

    Relabeling preserves original index order.  Returns (subgraph, kept)
    where kept[new_index] = original index.
    """
    if s.n != g.n:
        raise InvalidArgument(f"vertex set over {s.n} vertices applied to graph on {g.n}")
    keep_mask = ((1 << g.n) - 1) & ~s.mask
    kept = list(_iter_bits(keep_mask))
    new_of = {old: new for new, old in enumerate(kept)}
    nn = len(kept)

    if g.backend == "sorted":
        arr = g.edge_array()
        if arr.size:
            lookup = np.full(g.n, -1, np.int64)
            lookup[kept] = np.arange(nn)
            ok = (lookup[arr[:, 0]] >= 0) & (lookup[arr[:, 1]] >= 0)
            arr = lookup[arr[ok]]
        return _sorted_graph_from_edges(nn, arr.reshape(-1, 2)), kept

    rows = [0] * nn
    for new_u, old_u in enumerate(kept):
        above = keep_mask & ~((2 << old_u) - 1)
        for old_v in _iter_bits(g._rows[old_u] & above):
            new_v = new_of[old_v]
            rows[new_u] |= 1 << new_v
            rows[new_v] |= 1 << new_u
    return Graph(nn, "bitset", rows=rows), kept


def complement(g: Graph) -> Graph:
    """Complement graph: uv is an edge iff u != v and uv is not an edge of g."""
    if g.n * g.n > DENSE_BIT_BUDGET:
        raise InvalidArgument(f"complement of an n={g.n} graph exceeds the dense budget")
    full = (1 << g.n) - 1
    rows = [(~g.neighbor_mask(v)) & full & ~(1 << v) for v in range(g.n)]
    return Graph(g.n, "bitset", rows=rows)


def max_degree(g: Graph) -> int:
    if g.n == 0:
        raise EmptyGraph("max_degree of a graph with no vertices")
    return max(g.degrees)
