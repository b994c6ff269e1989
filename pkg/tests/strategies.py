from __future__ import annotations

import hypothesis.strategies as st

from expind.graph import Graph, graph6_pairs


@st.composite
def graphs(draw: st.DrawFn, min_n: int = 1, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = graph6_pairs(n)
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, b in zip(pairs, bits, strict=True) if b])


@st.composite
def trees(draw: st.DrawFn, min_n: int = 1, max_n: int = 12) -> Graph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    parents = [draw(st.integers(min_value=0, max_value=v - 1)) for v in range(1, n)]
    return Graph.from_edges(n, [(p, v) for v, p in enumerate(parents, start=1)])


@st.composite
def graphs_with_set(draw: st.DrawFn, max_n: int = 10) -> tuple[Graph, list[int]]:
    g = draw(graphs(max_n=max_n))
    members = draw(st.lists(st.integers(min_value=0, max_value=g.n - 1), unique=True))
    return g, sorted(members)
