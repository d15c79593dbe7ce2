import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trident import (
    VertexSet,
    build_graph,
    closed_neighborhood,
    complement,
    delete_vertices,
    max_degree,
)
from trident.errors import EmptyGraph, InvalidVertex, SelfLoopRejected
from conftest import complete_graph

BACKENDS = ["bitset", "sorted"]


def random_edges(rng, n, p=0.4):
    return [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]


@pytest.mark.parametrize("backend", BACKENDS)
class TestBuild:
    def test_triangle(self, backend):
        g = build_graph(3, [(0, 1), (1, 2), (0, 2)], backend=backend)
        assert g.degrees == [2, 2, 2]
        assert g.m == 3

    def test_empty(self, backend):
        g = build_graph(4, [], backend=backend)
        assert g.degrees == [0, 0, 0, 0]
        assert g.m == 0

    def test_duplicate_edges_idempotent(self, backend):
        g = build_graph(2, [(0, 1), (1, 0)], backend=backend)
        assert g.degrees == [1, 1]
        assert g.m == 1

    def test_out_of_range_rejected(self, backend):
        with pytest.raises(InvalidVertex):
            build_graph(3, [(0, 3)], backend=backend)
        with pytest.raises(InvalidVertex):
            build_graph(3, [(-1, 0)], backend=backend)

    def test_self_loop_rejected(self, backend):
        with pytest.raises(SelfLoopRejected):
            build_graph(3, [(1, 1)], backend=backend)

    def test_symmetry_and_degree_cache(self, backend):
        rng = random.Random(7)
        g = build_graph(9, random_edges(rng, 9), backend=backend)
        for u in range(9):
            for v in range(9):
                assert g.has_edge(u, v) == g.has_edge(v, u)
            assert g.degrees[u] == len(g.neighbors(u))
            assert u not in g.neighbors(u)


@pytest.mark.parametrize("backend", BACKENDS)
class TestNeighborhood:
    def test_complete(self, backend):
        g = complete_graph(3, backend)
        assert closed_neighborhood(g, 0).members() == [0, 1, 2]

    def test_isolated(self, backend):
        g = build_graph(4, [], backend=backend)
        assert closed_neighborhood(g, 2).members() == [2]

    def test_star_leaf(self, backend):
        g = build_graph(4, [(0, 1), (0, 2), (0, 3)], backend=backend)
        assert closed_neighborhood(g, 1).members() == [0, 1]

    def test_size_is_degree_plus_one(self, backend):
        rng = random.Random(3)
        g = build_graph(8, random_edges(rng, 8), backend=backend)
        for v in range(8):
            assert len(closed_neighborhood(g, v)) == g.degrees[v] + 1

    def test_invalid_vertex(self, backend):
        g = build_graph(3, [], backend=backend)
        with pytest.raises(InvalidVertex):
            closed_neighborhood(g, 3)


@pytest.mark.parametrize("backend", BACKENDS)
class TestDelete:
    def test_k4_minus_vertex_is_k3(self, backend):
        g = complete_graph(4, backend)
        sub, kept = delete_vertices(g, VertexSet.from_vertices(4, [0]))
        assert kept == [1, 2, 3]
        assert sub == complete_graph(3)

    def test_component_removal(self, backend):
        # K4 on 0..3 plus an edge 4-5; deleting N[4] leaves the K4
        edges = [(i, j) for i in range(4) for j in range(i + 1, 4)] + [(4, 5)]
        g = build_graph(6, edges, backend=backend)
        sub, kept = delete_vertices(g, closed_neighborhood(g, 4))
        assert kept == [0, 1, 2, 3]
        assert sub == complete_graph(4)

    def test_empty_deletion_is_identity(self, backend):
        rng = random.Random(11)
        g = build_graph(7, random_edges(rng, 7), backend=backend)
        sub, kept = delete_vertices(g, VertexSet(0, 7))
        assert kept == list(range(7))
        assert sub == build_graph(7, g.edge_list())

    def test_vertex_count_drops_by_set_size(self, backend):
        rng = random.Random(5)
        for _ in range(25):
            n = rng.randrange(1, 9)
            g = build_graph(n, random_edges(rng, n), backend=backend)
            s = VertexSet.from_vertices(n, [v for v in range(n) if rng.random() < 0.5])
            sub, _ = delete_vertices(g, s)
            assert sub.n == n - len(s)


class TestComplement:
    def test_k3(self):
        assert complement(complete_graph(3)) == build_graph(3, [])

    def test_empty_to_complete(self):
        assert complement(build_graph(5, [])) == complete_graph(5)

    def test_path3(self):
        g = build_graph(3, [(0, 1), (1, 2)])
        assert complement(g) == build_graph(3, [(0, 2)])

    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 10), st.integers(0, 2**45))
    def test_involution(self, n, seed):
        rng = random.Random(seed)
        g = build_graph(n, random_edges(rng, n))
        assert complement(complement(g)) == g


class TestMaxDegree:
    def test_examples(self):
        assert max_degree(complete_graph(4)) == 3
        star = build_graph(6, [(0, i) for i in range(1, 6)])
        assert max_degree(star) == 5
        assert max_degree(build_graph(3, [])) == 0

    def test_empty_graph_rejected(self):
        with pytest.raises(EmptyGraph):
            max_degree(build_graph(0, []))


@pytest.mark.parametrize("backend", BACKENDS)
def test_edge_list_round_trip(backend):
    rng = random.Random(17)
    for _ in range(30):
        n = rng.randrange(0, 10)
        g = build_graph(n, random_edges(rng, n), backend=backend)
        assert build_graph(n, g.edge_list(), backend=backend) == g


def test_backends_agree_on_structure():
    rng = random.Random(23)
    for _ in range(20):
        n = rng.randrange(1, 12)
        edges = random_edges(rng, n)
        a = build_graph(n, edges, backend="bitset")
        b = build_graph(n, edges, backend="sorted")
        assert a.edge_list() == b.edge_list()
        assert a.degrees == b.degrees
