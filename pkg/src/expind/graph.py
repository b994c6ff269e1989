from __future__ import annotations

import math
from collections import deque
from collections.abc import Iterable, Iterator, Sequence
from collections.abc import Set as AbstractSet
from dataclasses import dataclass
from functools import cached_property

from .errors import InvalidGraphError

# Distances are ints, or INFINITY when no admissible path exists.
ExtendedDist = int | float
INFINITY: float = math.inf

# 2^21 labeled graphs on 7 vertices is the most the exhaustive suites touch.
MAX_LABELED_ORDER = 7


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    n: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise InvalidGraphError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        for u, row in enumerate(self.adj):
            prev = -1
            for v in row:
                if v <= prev:
                    raise InvalidGraphError(f"adjacency of {u} is not strictly increasing")
                if not 0 <= v < self.n:
                    raise InvalidGraphError(f"neighbor {v} of {u} out of range")
                if v == u:
                    raise InvalidGraphError(f"self-loop at {u}")
                prev = v
        sets = self.neighbor_sets
        for u, row in enumerate(self.adj):
            for v in row:
                if u not in sets[v]:
                    raise InvalidGraphError(f"edge {u}-{v} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidGraphError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise InvalidGraphError(f"self-loop at {u}")
            if v in rows[u]:
                raise InvalidGraphError(f"duplicate edge {min(u, v)}-{max(u, v)}")
            rows[u].add(v)
            rows[v].add(u)
        return cls(n, tuple(tuple(sorted(r)) for r in rows))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, tuple(() for _ in range(n)))

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(row) for row in self.adj)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighborhood of each vertex as a bitmask."""
        out = []
        for row in self.adj:
            mask = 0
            for v in row:
                mask |= 1 << v
            out.append(mask)
        return tuple(out)

    @cached_property
    def m(self) -> int:
        return sum(len(row) for row in self.adj) // 2

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.adj)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbor_sets[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, row in enumerate(self.adj):
            for v in row:
                if u < v:
                    yield u, v

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"


@dataclass(frozen=True, order=True)
class VertexSet:
    """Strictly increasing tuple of vertex ids."""

    members: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        prev = -1
        for v in self.members:
            if v <= prev:
                raise InvalidGraphError(f"vertex set {self.members} is not strictly increasing")
            prev = v

    @classmethod
    def of(cls, vertices: Iterable[int], n: int | None = None) -> VertexSet:
        members = tuple(sorted(set(vertices)))
        if members and members[0] < 0:
            raise InvalidGraphError(f"negative vertex id {members[0]}")
        if n is not None and members and members[-1] >= n:
            raise InvalidGraphError(f"vertex {members[-1]} out of range for n={n}")
        return cls(members)

    @cached_property
    def as_frozenset(self) -> frozenset[int]:
        return frozenset(self.members)

    @property
    def mask(self) -> int:
        mask = 0
        for v in self.members:
            mask |= 1 << v
        return mask

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, v: object) -> bool:
        return v in self.as_frozenset

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self.members)) + "}"


def as_vertex_set(vertices: VertexSet | Iterable[int], n: int) -> VertexSet:
    if isinstance(vertices, VertexSet):
        if vertices.members and vertices.members[-1] >= n:
            raise InvalidGraphError(f"vertex {vertices.members[-1]} out of range for n={n}")
        return vertices
    return VertexSet.of(vertices, n)


def bfs_distances(
    g: Graph, source: int, forbidden: VertexSet | Iterable[int] = ()
) -> list[ExtendedDist]:
    """Shortest-path lengths from ``source`` through vertices outside ``forbidden``."""
    blocked = as_vertex_set(forbidden, g.n)
    if not 0 <= source < g.n:
        raise InvalidGraphError(f"source {source} out of range for n={g.n}")
    if source in blocked:
        raise InvalidGraphError(f"source {source} is forbidden")
    return bfs_avoiding(g, source, blocked.as_frozenset)


def bfs_avoiding(g: Graph, source: int, blocked: AbstractSet[int]) -> list[ExtendedDist]:
    """Unchecked BFS from ``source`` that never enters ``blocked``."""
    dist: list[ExtendedDist] = [INFINITY] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for v in g.adj[u]:
            if dist[v] == INFINITY and v not in blocked:
                dist[v] = du + 1
                queue.append(v)
    return dist


def distance_matrix(g: Graph) -> list[list[ExtendedDist]]:
    return [bfs_distances(g, s) for s in range(g.n)]


def diameter(g: Graph) -> ExtendedDist:
    if g.n < 1:
        raise InvalidGraphError("diameter needs at least one vertex")
    return max(max(row) for row in distance_matrix(g))


def components(g: Graph) -> list[tuple[int, ...]]:
    seen = [False] * g.n
    out: list[tuple[int, ...]] = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in g.adj[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        out.append(tuple(sorted(comp)))
    return out


def is_connected(g: Graph) -> bool:
    return g.n >= 1 and len(components(g)) == 1


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def require_tree(g: Graph) -> None:
    if not is_tree(g):
        raise InvalidGraphError(f"expected a tree, got n={g.n}, m={g.m}")


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise InvalidGraphError("expected a connected graph")


def induced_subgraph(
    g: Graph, vertices: VertexSet | Iterable[int]
) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by ``vertices``, relabeled in order; also returns new->old ids."""
    w = as_vertex_set(vertices, g.n)
    if not w:
        raise InvalidGraphError("induced subgraph of an empty vertex set")
    index = {old: new for new, old in enumerate(w.members)}
    rows = tuple(
        tuple(index[v] for v in g.adj[old] if v in index) for old in w.members
    )
    return Graph(len(w), rows), w.members


def graph6_pairs(n: int) -> list[tuple[int, int]]:
    """Vertex pairs in graph6 bit order: (0,1), (0,2), (1,2), (0,3), ..."""
    return [(u, v) for v in range(n) for u in range(v)]


def enumerate_labeled_graphs(n: int, max_degree: int | None = None) -> Iterator[Graph]:
    """Every labeled graph on n vertices exactly once, optionally with a degree cap."""
    if not 1 <= n <= MAX_LABELED_ORDER:
        raise InvalidGraphError(f"labeled enumeration supports 1 <= n <= {MAX_LABELED_ORDER}")
    pairs = graph6_pairs(n)
    if max_degree is None:
        for mask in range(1 << len(pairs)):
            yield Graph.from_edges(n, (p for i, p in enumerate(pairs) if mask >> i & 1))
        return
    yield from _capped_graphs(n, pairs, max_degree)


def _capped_graphs(
    n: int, pairs: Sequence[tuple[int, int]], cap: int
) -> Iterator[Graph]:
    deg = [0] * n
    chosen: list[tuple[int, int]] = []

    def extend(i: int) -> Iterator[Graph]:
        if i == len(pairs):
            yield Graph.from_edges(n, chosen)
            return
        yield from extend(i + 1)
        u, v = pairs[i]
        if deg[u] < cap and deg[v] < cap:
            deg[u] += 1
            deg[v] += 1
            chosen.append((u, v))
            yield from extend(i + 1)
            chosen.pop()
            deg[u] -= 1
            deg[v] -= 1

    yield from extend(0)
