"""Exact triangle, clique, and neighborhood-meeting counts.

The central runtime identity (checked on every full report): six times the
sum over vertices of the number of triangles meeting each closed
neighborhood, plus the ordered-4-tuple statistic W(G), equals the sum of
cubed degrees.  A failure is an implementation bug, never a property of
the input, and raises IdentityViolation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _fast
from .errors import IdentityViolation, InvalidCliqueSize
from .graph import Graph, _iter_bits, closed_neighborhood, delete_vertices


@dataclass(frozen=True)
class CountsReport:
    triangle_count: int
    per_vertex_meeting: list[int]
    w_count: int
    degree_cube_sum: int
    omega_count: int

    def to_dict(self) -> dict:
        return {
            "triangle_count": self.triangle_count,
            "per_vertex_meeting": list(self.per_vertex_meeting),
            "w_count": self.w_count,
            "degree_cube_sum": self.degree_cube_sum,
            "omega_count": self.omega_count,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CountsReport":
        return cls(
            triangle_count=d["triangle_count"],
            per_vertex_meeting=list(d["per_vertex_meeting"]),
            w_count=d["w_count"],
            degree_cube_sum=d["degree_cube_sum"],
            omega_count=d["omega_count"],
        )


# -- triangle counting ----------------------------------------------------


def _count_triangles_bitset(g: Graph) -> int:
    rows = g._rows
    total = 0
    for u in range(g.n):
        ru = rows[u]
        for v in _iter_bits(ru >> (u + 1)):
            v += u + 1
            total += ((ru & rows[v]) >> (v + 1)).bit_count()
    return total


def _forward_csr(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    """Orient each edge from lower to higher (degree, index) rank; CSR rows sorted."""
    arr = g.edge_array()
    n = g.n
    deg = np.asarray(g.degrees, np.int64)
    rank = np.empty(n, np.int64)
    rank[np.lexsort((np.arange(n), deg))] = np.arange(n)
    if arr.size == 0:
        return np.zeros(n + 1, np.int64), np.empty(0, np.int64)
    u, v = arr[:, 0], arr[:, 1]
    forward = rank[u] < rank[v]
    heads = np.where(forward, u, v)
    tails = np.where(forward, v, u)
    order = np.lexsort((tails, heads))
    heads, tails = heads[order], tails[order]
    indptr = np.concatenate([[0], np.cumsum(np.bincount(heads, minlength=n))]).astype(np.int64)
    return indptr, tails.astype(np.int64)


def count_triangles(g: Graph) -> int:
    """Exact number of unordered vertex triples inducing a triangle."""
    if g.backend == "bitset":
        return _count_triangles_bitset(g)
    indptr, indices = _forward_csr(g)
    return _fast.forward_triangles(indptr, indices)


# -- t-clique counting ----------------------------------------------------


def count_cliques(g: Graph, t: int) -> int:
    """Exact number of t-subsets of vertices inducing a complete graph."""
    if not isinstance(t, int) or t < 1:
        raise InvalidCliqueSize(f"clique size must be a positive integer, got {t!r}")
    if t == 1:
        return g.n
    if t == 2:
        return g.m
    n = g.n
    deg = g.degrees
    order = sorted(range(n), key=lambda v: (deg[v], v))
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    # up[i] = neighbors of order[i] appearing later in the order, as a bitmask
    up = [0] * n
    for u, v in g.edges():
        a, b = pos[u], pos[v]
        if a > b:
            a, b = b, a
        up[a] |= 1 << b

    def rec(mask: int, k: int) -> int:
        if k == 1:
            return mask.bit_count()
        total = 0
        for i in _iter_bits(mask):
            total += rec(mask & up[i], k - 1)
        return total

    return sum(rec(up[i], t - 1) for i in range(n))


# -- neighborhood meeting counts ------------------------------------------


def triangles_meeting(g: Graph, v: int) -> int:
    """Triangles with at least one vertex in N[v], via the peel decomposition."""
    g.check_vertex(v)
    rest, _ = delete_vertices(g, closed_neighborhood(g, v))
    return count_triangles(g) - count_triangles(rest)


def _closed_masks(g: Graph) -> list[int]:
    return [g.neighbor_mask(v) | (1 << v) for v in range(g.n)]


def _triangles_of_masks(rows: list[int], n: int):
    for u in range(n):
        ru = rows[u]
        for v in _iter_bits(ru >> (u + 1)):
            v += u + 1
            for w in _iter_bits((ru & rows[v]) >> (v + 1)):
                yield u, v, w + v + 1


def meeting_counts(g: Graph) -> list[int]:
    """Per-vertex triangles-meeting counts, via triangle enumeration and marking.

    A triangle {a, b, c} meets N[v] exactly when v lies in
    N[a] | N[b] | N[c] (closed), so one pass over the triangles suffices.
    """
    rows = [g.neighbor_mask(v) for v in range(g.n)] if g.backend != "bitset" else g._rows
    closed = [rows[v] | (1 << v) for v in range(g.n)]
    counts = [0] * g.n
    for a, b, c in _triangles_of_masks(rows, g.n):
        for v in _iter_bits(closed[a] | closed[b] | closed[c]):
            counts[v] += 1
    return counts


def meeting_counts_by_deletion(g: Graph) -> list[int]:
    """Same vector computed independently through the decomposition identity."""
    return [triangles_meeting(g, v) for v in range(g.n)]


# -- W(G) ------------------------------------------------------------------


def count_w(g: Graph) -> int:
    """Ordered 4-tuples (x, u, v, w): u, v, w adjacent to x, pairwise non-adjacent.

    Repeats among u, v, w are allowed.  Computed per center x by
    inclusion-exclusion over the three forbidden pairs; validated against a
    quadruple-loop oracle in the test suite.
    """
    rows = [g.neighbor_mask(v) for v in range(g.n)] if g.backend != "bitset" else g._rows
    total = 0
    for x in range(g.n):
        nb = rows[x]
        d = nb.bit_count()
        if d == 0:
            continue
        e2 = 0  # ordered adjacent pairs inside N(x)
        s2 = 0  # sum over u in N(x) of |N(u) & N(x)|^2
        tx = 0  # triangles inside N(x)
        for u in _iter_bits(nb):
            k = (rows[u] & nb).bit_count()
            e2 += k
            s2 += k * k
            cu = (rows[u] & nb) >> (u + 1)
            for v in _iter_bits(cu):
                v += u + 1
                tx += ((rows[u] & rows[v] & nb) >> (v + 1)).bit_count()
        total += d * d * d - 3 * e2 * d + 3 * s2 - 6 * tx
    return total


# -- full report -----------------------------------------------------------


def full_report(g: Graph) -> CountsReport:
    """All counting statistics at once; asserts the 4-tuple identity exactly."""
    meeting = meeting_counts(g)
    report = CountsReport(
        triangle_count=count_triangles(g),
        per_vertex_meeting=meeting,
        w_count=count_w(g),
        degree_cube_sum=sum(d**3 for d in g.degrees),
        omega_count=6 * sum(meeting),
    )
    if report.omega_count + report.w_count != report.degree_cube_sum:
        raise IdentityViolation(
            f"6*sum|T_N[v]| + |W| = {report.omega_count} + {report.w_count} "
            f"!= {report.degree_cube_sum} = sum d^3"
        )
    return report
