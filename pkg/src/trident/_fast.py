"""Optional numba kernels for the large-graph paths.

Everything here has a pure-Python twin; if numba is unavailable the
callers fall back transparently and produce identical results.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn

        return wrap if not (args and callable(args[0])) else args[0]


@njit(cache=True)
def _forward_triangles(indptr, indices):
    """Triangle count over a forward-oriented CSR with sorted rows."""
    total = 0
    n = indptr.size - 1
    for u in range(n):
        for k in range(indptr[u], indptr[u + 1]):
            v = indices[k]
            a, b = indptr[u], indptr[v]
            ea, eb = indptr[u + 1], indptr[v + 1]
            while a < ea and b < eb:
                x, y = indices[a], indices[b]
                if x == y:
                    total += 1
                    a += 1
                    b += 1
                elif x < y:
                    a += 1
                else:
                    b += 1
    return total


def _forward_triangles_py(indptr, indices):
    total = 0
    n = indptr.size - 1
    for u in range(n):
        for k in range(indptr[u], indptr[u + 1]):
            v = indices[k]
            a, b = indptr[u], indptr[v]
            ea, eb = indptr[u + 1], indptr[v + 1]
            while a < ea and b < eb:
                x, y = indices[a], indices[b]
                if x == y:
                    total += 1
                    a += 1
                    b += 1
                elif x < y:
                    a += 1
                else:
                    b += 1
    return total


def forward_triangles(indptr: np.ndarray, indices: np.ndarray) -> int:
    fn = _forward_triangles if HAVE_NUMBA else _forward_triangles_py
    return int(fn(indptr, indices))


@njit(cache=True)
def _accept_proposals(pairs, deg, cap, out, m0):
    """Sequentially accept edge proposals while both endpoints are unsaturated."""
    m = m0
    for k in range(pairs.shape[0]):
        u, v = pairs[k, 0], pairs[k, 1]
        if u == v:
            continue
        if deg[u] < cap and deg[v] < cap:
            deg[u] += 1
            deg[v] += 1
            out[m, 0] = u
            out[m, 1] = v
            m += 1
    return m


def _accept_proposals_py(pairs, deg, cap, out, m0):
    m = m0
    for k in range(pairs.shape[0]):
        u, v = int(pairs[k, 0]), int(pairs[k, 1])
        if u == v:
            continue
        if deg[u] < cap and deg[v] < cap:
            deg[u] += 1
            deg[v] += 1
            out[m, 0] = u
            out[m, 1] = v
            m += 1
    return m


def accept_proposals(pairs, deg, cap, out, m0) -> int:
    fn = _accept_proposals if HAVE_NUMBA else _accept_proposals_py
    return int(fn(pairs, deg, cap, out, m0))
