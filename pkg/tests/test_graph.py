from __future__ import annotations

import itertools
import math

import pytest
from hypothesis import given, settings

from expind.errors import InvalidGraphError
from expind.graph import (
    INFINITY,
    Graph,
    VertexSet,
    bfs_distances,
    components,
    diameter,
    enumerate_labeled_graphs,
    graph6_pairs,
    induced_subgraph,
    is_connected,
    is_tree,
)
from strategies import graphs


def test_from_edges_normalizes_adjacency() -> None:
    g = Graph.from_edges(4, [(2, 0), (0, 1), (3, 2)])
    assert g.adj == ((1, 2), (0,), (0, 3), (2,))
    assert g.m == 3
    assert list(g.edges()) == [(0, 1), (0, 2), (2, 3)]
    assert g.degrees == (2, 1, 2, 1)
    assert g.masks[0] == 0b110


@pytest.mark.parametrize(
    "edges",
    [[(0, 0)], [(0, 3)], [(0, 1), (1, 0)], [(-1, 0)]],
)
def test_from_edges_rejects_bad_edges(edges: list[tuple[int, int]]) -> None:
    with pytest.raises(InvalidGraphError):
        Graph.from_edges(3, edges)


def test_asymmetric_adjacency_rejected() -> None:
    with pytest.raises(InvalidGraphError):
        Graph(2, ((1,), ()))


def test_vertex_set_ordering_and_ops() -> None:
    s = VertexSet.of([4, 1, 1, 2])
    assert s.members == (1, 2, 4)
    assert 2 in s and 3 not in s
    assert VertexSet((0, 3)) < VertexSet((1,))
    assert repr(s) == "{1,2,4}"
    with pytest.raises(InvalidGraphError):
        VertexSet((2, 1))
    with pytest.raises(InvalidGraphError):
        VertexSet.of([5], n=5)


def test_bfs_with_forbidden_vertices() -> None:
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    assert bfs_distances(g, 0) == [0, 1, 2, 3, 4]
    dist = bfs_distances(g, 0, forbidden=[2])
    assert dist[:2] == [0, 1]
    assert dist[2] == dist[3] == dist[4] == INFINITY
    with pytest.raises(InvalidGraphError):
        bfs_distances(g, 2, forbidden=[2])


def test_diameter_and_components() -> None:
    g = Graph.from_edges(5, [(0, 1), (3, 4)])
    assert components(g) == [(0, 1), (2,), (3, 4)]
    assert not is_connected(g)
    assert math.isinf(diameter(g))
    assert diameter(Graph.empty(1)) == 0
    with pytest.raises(InvalidGraphError):
        diameter(Graph.empty(0))


def test_is_tree() -> None:
    assert is_tree(Graph.empty(1))
    assert is_tree(Graph.from_edges(3, [(0, 1), (1, 2)]))
    assert not is_tree(Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)]))
    assert not is_tree(Graph.from_edges(4, [(0, 1), (2, 3)]))
    assert not is_tree(Graph.empty(0))


def test_induced_subgraph_relabels_in_order() -> None:
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    h, old = induced_subgraph(g, [4, 2, 3])
    assert old == (2, 3, 4)
    assert list(h.edges()) == [(0, 1), (1, 2)]
    with pytest.raises(InvalidGraphError):
        induced_subgraph(g, [])


def test_graph6_pair_order() -> None:
    assert graph6_pairs(4) == [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]


@pytest.mark.parametrize("n, count", [(1, 1), (2, 2), (3, 8), (4, 64), (5, 1024)])
def test_labeled_graph_counts(n: int, count: int) -> None:
    assert sum(1 for _ in enumerate_labeled_graphs(n)) == count


def test_degree_capped_enumeration_matches_filter() -> None:
    capped = {tuple(g.edges()) for g in enumerate_labeled_graphs(5, max_degree=2)}
    filtered = {tuple(g.edges()) for g in enumerate_labeled_graphs(5) if g.max_degree <= 2}
    assert capped == filtered


def test_labeled_enumeration_range() -> None:
    with pytest.raises(InvalidGraphError):
        next(enumerate_labeled_graphs(8))


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=9))
def test_bfs_distances_are_symmetric(g: Graph) -> None:
    for u in range(g.n):
        du = bfs_distances(g, u)
        for v in range(g.n):
            assert du[v] == bfs_distances(g, v)[u]


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8))
def test_bfs_distances_satisfy_triangle_inequality(g: Graph) -> None:
    dist = [bfs_distances(g, u) for u in range(g.n)]
    for a, b, c in itertools.product(range(g.n), repeat=3):
        assert dist[a][c] <= dist[a][b] + dist[b][c]


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8))
def test_induced_subgraph_on_every_vertex_is_identity(g: Graph) -> None:
    assert induced_subgraph(g, range(g.n)) == (g, tuple(range(g.n)))
