from __future__ import annotations

import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings

from expind.errors import GraphFormatError, InvalidGraphError
from expind.graph import Graph, enumerate_labeled_graphs, is_tree
from expind.trees import (
    ahu_canonical,
    enumerate_free_trees,
    graph_from_code,
    rooted_code,
    rooted_trees,
    tree_centers,
)
from strategies import trees

FREE_TREE_COUNTS = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]


def _relabel(g: Graph, rng: random.Random) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def test_centers() -> None:
    p5 = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    p4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert tree_centers(p5) == [2]
    assert tree_centers(p4) == [1, 2]
    assert tree_centers(Graph.empty(1)) == [0]
    with pytest.raises(InvalidGraphError):
        tree_centers(Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)]))


def test_rooted_code_and_inverse() -> None:
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert rooted_code(star, 0) == "(()()())"
    assert rooted_code(star, 1) == "((()()))"
    rebuilt = graph_from_code("((()())())")
    assert rebuilt.n == 5 and is_tree(rebuilt)
    assert rooted_code(rebuilt, 0) == "((()())())"


@pytest.mark.parametrize("bad", ["", "(", "())", "()()", "(x)"])
def test_graph_from_code_rejects_bad_codes(bad: str) -> None:
    with pytest.raises(GraphFormatError):
        graph_from_code(bad)


@pytest.mark.parametrize("n, count", list(enumerate(FREE_TREE_COUNTS, start=1)))
def test_free_tree_counts(n: int, count: int) -> None:
    codes = [ahu_canonical(t) for t in enumerate_free_trees(n)]
    assert len(codes) == count
    assert len(set(codes)) == count


def test_free_trees_match_labeled_tree_classes() -> None:
    for n in range(1, 7):
        labeled = {ahu_canonical(g) for g in enumerate_labeled_graphs(n) if is_tree(g)}
        assert labeled == {ahu_canonical(t) for t in enumerate_free_trees(n)}


def test_rooted_tree_counts() -> None:
    assert [len(rooted_trees(s)) for s in range(1, 8)] == [1, 1, 2, 4, 9, 20, 48]


def test_free_tree_range() -> None:
    with pytest.raises(InvalidGraphError):
        next(enumerate_free_trees(21))
    with pytest.raises(InvalidGraphError):
        next(enumerate_free_trees(0))


@settings(max_examples=150, deadline=None)
@given(trees(max_n=14))
def test_canonical_code_ignores_labels(t: Graph) -> None:
    rng = random.Random(t.n)
    assert ahu_canonical(_relabel(t, rng)) == ahu_canonical(t)
    assert ahu_canonical(graph_from_code(ahu_canonical(t))) == ahu_canonical(t)


def _to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def test_canonical_codes_agree_with_isomorphism() -> None:
    rng = random.Random(7)
    pool = [t for n in range(1, 8) for t in enumerate_free_trees(n)]
    pool += [_relabel(t, rng) for t in pool]
    for a, b in itertools.combinations_with_replacement(pool, 2):
        same_code = ahu_canonical(a) == ahu_canonical(b)
        assert same_code == nx.is_isomorphic(_to_networkx(a), _to_networkx(b))
