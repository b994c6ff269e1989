"""AHU canonical codes for trees and free-tree enumeration."""

from __future__ import annotations

from collections import deque
from collections.abc import Iterator, Sequence
from functools import lru_cache

from .errors import GraphFormatError, InvalidGraphError
from .graph import Graph, require_tree

MAX_FREE_TREE_ORDER = 20

LEAF = "()"


def tree_centers(t: Graph) -> list[int]:
    """The one or two centers of a tree, found by peeling leaves."""
    require_tree(t)
    if t.n <= 2:
        return list(range(t.n))
    deg = list(t.degrees)
    layer = [v for v in range(t.n) if deg[v] == 1]
    remaining = t.n
    while remaining > 2:
        remaining -= len(layer)
        nxt: list[int] = []
        for u in layer:
            for v in t.adj[u]:
                deg[v] -= 1
                if deg[v] == 1:
                    nxt.append(v)
        layer = nxt
    return sorted(layer)


def rooted_code(t: Graph, root: int) -> str:
    """Parenthesis code of ``t`` rooted at ``root`` with children codes sorted."""
    parent = [-1] * t.n
    order = [root]
    seen = [False] * t.n
    seen[root] = True
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for v in t.adj[u]:
            if not seen[v]:
                seen[v] = True
                parent[v] = u
                order.append(v)
                queue.append(v)
    child_codes: list[list[str]] = [[] for _ in range(t.n)]
    code = [""] * t.n
    for v in reversed(order):
        code[v] = "(" + "".join(sorted(child_codes[v])) + ")"
        if parent[v] >= 0:
            child_codes[parent[v]].append(code[v])
    return code[root]


def ahu_canonical(t: Graph) -> str:
    """Canonical string of a free tree: the least rooted code over its centers."""
    return min(rooted_code(t, c) for c in tree_centers(t))


def graph_from_code(code: str) -> Graph:
    """Build the rooted tree described by a parenthesis code; vertices in preorder."""
    edges: list[tuple[int, int]] = []
    stack: list[int] = []
    n = 0
    for i, ch in enumerate(code):
        if ch == "(":
            if n and not stack:
                raise GraphFormatError(f"tree code has several roots at offset {i}")
            if stack:
                edges.append((stack[-1], n))
            stack.append(n)
            n += 1
        elif ch == ")":
            if not stack:
                raise GraphFormatError(f"unbalanced tree code at offset {i}")
            stack.pop()
        else:
            raise GraphFormatError(f"unexpected character {ch!r} in tree code")
    if stack or n == 0:
        raise GraphFormatError("unbalanced tree code")
    return Graph.from_edges(n, edges)


def split_children(code: str) -> list[str]:
    """Top-level child codes of a rooted code."""
    out: list[str] = []
    depth = 0
    start = 1
    for i in range(1, len(code) - 1):
        depth += 1 if code[i] == "(" else -1
        if depth == 0:
            out.append(code[start : i + 1])
            start = i + 1
    return out


def join_children(children: Sequence[str]) -> str:
    return "(" + "".join(sorted(children)) + ")"


@lru_cache(maxsize=None)
def rooted_trees(size: int) -> tuple[str, ...]:
    """Codes of all rooted trees with ``size`` vertices, one per isomorphism class."""
    if size < 1:
        return ()
    if size == 1:
        return (LEAF,)
    pool = _pool(size - 1)
    return tuple(join_children(f) for f in _forests(size - 1, pool, len(pool) - 1))


def _pool(max_size: int) -> list[tuple[int, str]]:
    return [(s, c) for s in range(1, max_size + 1) for c in rooted_trees(s)]


def _forests(total: int, pool: Sequence[tuple[int, str]], start: int) -> Iterator[list[str]]:
    # multisets of pool entries summing to total, indices non-increasing
    if total == 0:
        yield []
        return
    for i in range(start, -1, -1):
        size, code = pool[i]
        if size > total:
            continue
        for rest in _forests(total - size, pool, i):
            yield [code, *rest]


def free_tree_codes(n: int) -> Iterator[str]:
    """
    One rooted code per free tree on n vertices. Trees with a unique centroid
    are rooted there (all branches below n/2); trees with two centroids are
    an unordered pair of n/2-vertex rooted trees joined at their roots.
    """
    if not 1 <= n <= MAX_FREE_TREE_ORDER:
        raise InvalidGraphError(f"free-tree enumeration supports 1 <= n <= {MAX_FREE_TREE_ORDER}")
    if n == 1:
        yield LEAF
        return
    pool = _pool((n - 1) // 2)
    for forest in _forests(n - 1, pool, len(pool) - 1):
        yield join_children(forest)
    if n % 2 == 0:
        halves = rooted_trees(n // 2)
        for i, a in enumerate(halves):
            for b in halves[i:]:
                yield join_children([*split_children(a), b])


def enumerate_free_trees(n: int) -> Iterator[Graph]:
    for code in free_tree_codes(n):
        yield graph_from_code(code)
