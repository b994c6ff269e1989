"""Named graph families, the family 𝒯 of trees with α_e = α, and constructive bounds."""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from pydantic import BaseModel, ConfigDict, Field

from .errors import InvalidGraphError
from .graph import (
    Graph,
    VertexSet,
    components,
    distance_matrix,
    induced_subgraph,
    is_tree,
    require_connected,
    require_tree,
)
from .trees import LEAF, ahu_canonical, graph_from_code, join_children, split_children


class FamilyKind(str, Enum):
    PATH = "path"
    CYCLE = "cycle"
    STAR = "star"
    FULL_BINARY = "fbt"
    BULL = "bull"
    T1 = "t1"
    T2 = "t2"
    T3 = "t3"
    T4 = "t4"
    T5 = "t5"
    P1 = "p1"
    P8 = "p8"


# Smallest admissible k per parametrized kind.
_MIN_K = {
    FamilyKind.PATH: 1,
    FamilyKind.CYCLE: 3,
    FamilyKind.STAR: 1,
    FamilyKind.FULL_BINARY: 1,
    FamilyKind.T1: 1,
    FamilyKind.T2: 1,
    FamilyKind.T3: 1,
    FamilyKind.T4: 3,
    FamilyKind.T5: 1,
}
_FIXED_ORDER = {FamilyKind.BULL: 5, FamilyKind.P1: 1, FamilyKind.P8: 8}


class FamilyDescriptor(BaseModel):
    """Identifies a graph as a family member and names the role of each vertex."""

    model_config = ConfigDict(frozen=True)

    kind: FamilyKind
    k: int
    labeling: dict[str, int] = Field(default_factory=dict)
    shape: str | None = None

    @property
    def name(self) -> str:
        if self.kind in (FamilyKind.T1, FamilyKind.T2, FamilyKind.T3, FamilyKind.T4, FamilyKind.T5):
            return f"{self.kind.value.upper()}({self.k})"
        if self.kind in _FIXED_ORDER:
            return self.kind.value.upper() if self.kind != FamilyKind.BULL else "bull"
        return f"{self.kind.value}({self.k})"

    def vertices(self, *roles: str) -> VertexSet:
        return VertexSet.of(self.labeling[r] for r in roles)


class _Builder:
    def __init__(self) -> None:
        self.ids: dict[str, int] = {}
        self.edges: list[tuple[int, int]] = []

    def path(self, *roles: str) -> _Builder:
        for r in roles:
            self.ids.setdefault(r, len(self.ids))
        for a, b in zip(roles, roles[1:], strict=False):
            self.edges.append((self.ids[a], self.ids[b]))
        return self

    def build(self) -> tuple[Graph, dict[str, int]]:
        return Graph.from_edges(len(self.ids), self.edges), dict(self.ids)


def _comb(k: int) -> _Builder:
    b = _Builder()
    for i in range(1, k + 1):
        b.path(f"x{i}", f"y{i}")
    b.path(*(f"x{i}" for i in range(1, k + 1)))
    return b


def _fbt_builder(shape: str) -> _Builder:
    b = _Builder()
    b.path("r")
    stack = [("r", shape)]
    while stack:
        role, code = stack.pop()
        children = split_children(code)
        if len(children) not in (0, 2):
            raise InvalidGraphError(f"shape {shape!r} has a vertex with {len(children)} children")
        for i, child in enumerate(children):
            b.path(role, f"{role}{i}")
            stack.append((f"{role}{i}", child))
    return b


def generate(
    kind: FamilyKind | str, k: int | None = None, shape: str | None = None
) -> tuple[Graph, FamilyDescriptor]:
    """
    Build a family member. ``k`` is the order for paths and cycles, the leaf
    count for stars, the comb length for T1..T5 and the order for full binary
    trees given without an explicit ``shape`` code.
    """
    kind = FamilyKind(kind)
    if kind in _FIXED_ORDER:
        k = _FIXED_ORDER[kind]
    elif kind == FamilyKind.FULL_BINARY and shape is not None:
        k = len(shape) // 2
    elif k is None or k < _MIN_K[kind]:
        raise InvalidGraphError(f"{kind.value} needs k >= {_MIN_K[kind]}, got {k}")

    if kind == FamilyKind.PATH:
        b = _Builder().path(*(f"v{i}" for i in range(k)))
    elif kind == FamilyKind.CYCLE:
        b = _Builder().path(*(f"v{i}" for i in range(k)), "v0")
    elif kind == FamilyKind.STAR:
        b = _Builder()
        for i in range(1, k + 1):
            b.path("c", f"l{i}")
    elif kind == FamilyKind.FULL_BINARY:
        if shape is None:
            if k % 2 == 0:
                raise InvalidGraphError(f"full binary trees have odd order, got {k}")
            shape = balanced_shape((k + 1) // 2)
        b = _fbt_builder(shape)
    elif kind == FamilyKind.BULL:
        b = _Builder().path("hp", "p", "t", "q", "hq").path("p", "q")
    elif kind == FamilyKind.P1:
        b = _Builder().path("v0")
    elif kind == FamilyKind.P8:
        b = _Builder().path("d", "c", "b", "a", "a'", "b'", "c'", "d'")
    else:
        b = _comb(k)
        if kind == FamilyKind.T2:
            b.path("x1", "a")
        elif kind == FamilyKind.T3:
            b.path("x1", "a", "b", "c", "d")
        elif kind == FamilyKind.T4:
            b.path("x2", "a", "b")
        elif kind == FamilyKind.T5:
            b.path("x1", "a", "b", "c", "d").path(f"x{k}", "a'", "b'", "c'", "d'")
    g, labeling = b.build()
    return g, FamilyDescriptor(kind=kind, k=k, labeling=labeling, shape=shape)


def family_max_sets(desc: FamilyDescriptor) -> list[VertexSet]:
    """The maximum exponential independent sets a member of 𝒯 is known to have."""
    k = desc.k
    ys = [f"y{i}" for i in range(1, k + 1)]
    if desc.kind == FamilyKind.P1:
        roles = [["v0"]]
    elif desc.kind == FamilyKind.P8:
        roles = [["b", "d", "b'", "d'"]]
    elif desc.kind == FamilyKind.T1:
        roles = [ys, ["x1", *ys[1:]], [f"x{k}", *ys[:-1]]]
    elif desc.kind == FamilyKind.T2:
        roles = [["a", *ys]]
    elif desc.kind == FamilyKind.T3 and k == 1:
        roles = [["y1", "a", "d"], ["y1", "b", "d"]]
    elif desc.kind == FamilyKind.T3:
        roles = [["b", "d", *ys]]
    elif desc.kind == FamilyKind.T4:
        roles = [["b", *ys]]
    elif desc.kind == FamilyKind.T5:
        roles = [["b", "d", "b'", "d'", *ys]]
    else:
        raise InvalidGraphError(f"{desc.name} is not a member of the family 𝒯")
    return sorted({desc.vertices(*r) for r in roles})


_FAMILY_OFFSETS = {
    FamilyKind.T1: 0,
    FamilyKind.T2: 1,
    FamilyKind.T3: 2,
    FamilyKind.T4: 1,
    FamilyKind.T5: 4,
}


def family_alpha_e(kind: FamilyKind, k: int) -> int:
    return k + _FAMILY_OFFSETS[kind]


@lru_cache(maxsize=None)
def full_binary_shapes(leaves: int) -> tuple[str, ...]:
    """Rooted full binary tree codes with the given number of leaves."""
    if leaves < 1:
        return ()
    if leaves == 1:
        return (LEAF,)
    out: list[str] = []
    for left in range(1, leaves // 2 + 1):
        smaller = full_binary_shapes(left)
        larger = full_binary_shapes(leaves - left)
        for i, a in enumerate(smaller):
            for b in larger[i:] if left == leaves - left else larger:
                out.append(join_children([a, b]))
    return tuple(out)


def balanced_shape(leaves: int) -> str:
    if leaves < 1:
        raise InvalidGraphError("a full binary tree has at least one leaf")
    if leaves == 1:
        return LEAF
    return join_children([balanced_shape(leaves // 2), balanced_shape(leaves - leaves // 2)])


def enumerate_full_binary(n: int) -> Iterator[Graph]:
    """One graph per free tree on n vertices that admits a full binary rooting."""
    if n < 1 or n % 2 == 0:
        raise InvalidGraphError(f"full binary trees have odd order n >= 1, got {n}")
    seen: set[str] = set()
    for shape in full_binary_shapes((n + 1) // 2):
        g = graph_from_code(shape)
        code = ahu_canonical(g)
        if code not in seen:
            seen.add(code)
            yield g


@dataclass(frozen=True)
class FullBinaryCheck:
    ok: bool
    root: int | None = None


def is_full_binary(g: Graph) -> FullBinaryCheck:
    """
    A tree admits a full binary rooting iff it is K1, or it has exactly one
    vertex of degree 2 and every other vertex has degree 1 or 3.
    """
    if not is_tree(g):
        return FullBinaryCheck(False)
    if g.n == 1:
        return FullBinaryCheck(True, 0)
    degrees = g.degrees
    twos = [v for v, d in enumerate(degrees) if d == 2]
    if len(twos) == 1 and all(d in (1, 2, 3) for d in degrees):
        return FullBinaryCheck(True, twos[0])
    return FullBinaryCheck(False)


def full_binary_roots(g: Graph) -> list[int]:
    """Every root under which each vertex has zero or two children (by search)."""
    if not is_tree(g):
        return []
    return [
        r
        for r in range(g.n)
        if all(g.degree(v) - (0 if v == r else 1) in (0, 2) for v in range(g.n))
    ]


def _t_candidates(n: int) -> Iterator[tuple[FamilyKind, int | None]]:
    if n == 1:
        yield FamilyKind.P1, None
    if n == 8:
        yield FamilyKind.P8, None
    if n % 2 == 0 and n >= 2:
        yield FamilyKind.T1, n // 2
    if n % 2 == 1 and n >= 3:
        yield FamilyKind.T2, (n - 1) // 2
    if n % 2 == 0 and n >= 6:
        yield FamilyKind.T3, (n - 4) // 2
    if n % 2 == 0 and n >= 8:
        yield FamilyKind.T4, (n - 2) // 2
    if n % 2 == 0 and n >= 10:
        yield FamilyKind.T5, (n - 8) // 2


def t_membership(t: Graph) -> FamilyDescriptor | None:
    """The member of 𝒯 isomorphic to ``t``, if any."""
    require_tree(t)
    target = ahu_canonical(t)
    for kind, k in _t_candidates(t.n):
        member, desc = generate(kind, k)
        if ahu_canonical(member) == target:
            return desc
    return None


def diametral_path(g: Graph) -> list[int]:
    """
    A shortest path of length diam(G): it starts at the least vertex of
    maximum eccentricity and is the lexicographically least such sequence.
    """
    require_connected(g)
    dm = distance_matrix(g)
    diam = max(max(row) for row in dm)
    start = next(v for v in range(g.n) if max(dm[v]) == diam)
    targets = [t for t in range(g.n) if dm[start][t] == diam]
    path = [start]
    for step in range(1, int(diam) + 1):
        cur = path[-1]
        remaining = diam - step
        nxt = min(
            x
            for x in g.adj[cur]
            if dm[start][x] == step and any(dm[x][t] == remaining for t in targets)
        )
        targets = [t for t in targets if dm[nxt][t] == remaining]
        path.append(nxt)
    return path


def _every_fifth_pair(path: list[int]) -> list[int]:
    # positions 0, 2, 5, 7, 10, 12, ... along the path
    return [v for i, v in enumerate(path) if i % 5 in (0, 2)]


def theorem2_construction(g: Graph) -> VertexSet:
    """EIS of size at least (2 diam + 2) / 5 taken along a diametral path."""
    return VertexSet.of(_every_fifth_pair(diametral_path(g)))


def _oriented_path(g: Graph, comp: tuple[int, ...]) -> list[int]:
    inside = set(comp)
    ends = [v for v in comp if sum(1 for x in g.adj[v] if x in inside) <= 1]
    cur, prev = min(ends), -1
    path = [cur]
    while True:
        step = [x for x in g.adj[cur] if x in inside and x != prev]
        if not step:
            return path
        prev, cur = cur, step[0]
        path.append(cur)


def subcubic_candidates(t: Graph) -> tuple[VertexSet, VertexSet]:
    """
    The two sets from the subcubic tree bound: S1 from the leaves, S2 from
    the path components left after deleting the closed neighborhood of the
    degree-3 vertices.
    """
    require_tree(t)
    if t.max_degree > 3:
        raise InvalidGraphError(f"maximum degree {t.max_degree} exceeds 3")
    if t.n <= 3:
        raise InvalidGraphError(f"needs more than 3 vertices, got {t.n}")
    degrees = t.degrees
    leaves = [v for v in range(t.n) if degrees[v] == 1]
    if 2 not in degrees:
        leaves = leaves[:-1]
    s1 = VertexSet.of(leaves)

    removed: set[int] = set()
    for v in range(t.n):
        if degrees[v] == 3:
            removed.add(v)
            removed.update(t.adj[v])
    rest = [v for v in range(t.n) if v not in removed]
    picked: list[int] = []
    if rest:
        forest, old = induced_subgraph(t, rest)
        for comp in components(forest):
            picked.extend(old[v] for v in _every_fifth_pair(_oriented_path(forest, comp)))
    return s1, VertexSet.of(picked)


def theorem4_construction(t: Graph) -> VertexSet:
    """EIS of size at least (2n + 8) / 13 in a tree of maximum degree at most 3."""
    s1, s2 = subcubic_candidates(t)
    return s1 if len(s1) >= len(s2) else s2
