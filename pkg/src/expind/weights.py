"""Relative distances, exponential weights and the EIS / EDS checkers."""

from __future__ import annotations

from collections.abc import Iterable
from collections.abc import Set as AbstractSet
from dataclasses import dataclass
from itertools import combinations
from typing import Any

from .dyadic import ONE, ZERO, Dyadic, dyadic_sum
from .errors import InvalidGraphError
from .graph import INFINITY, ExtendedDist, Graph, VertexSet, as_vertex_set, bfs_avoiding

VertexSetLike = VertexSet | Iterable[int]


def _dist_json(d: ExtendedDist) -> int | str:
    return "inf" if d == INFINITY else int(d)


@dataclass(frozen=True)
class Contribution:
    source: int
    dist: ExtendedDist
    term: Dyadic


@dataclass(frozen=True)
class WeightReport:
    vertex: int
    weight: Dyadic
    contributions: tuple[Contribution, ...]

    def to_json(self) -> dict[str, Any]:
        return {
            "vertex": self.vertex,
            "weight": self.weight.to_json(),
            "contributions": [
                [c.source, _dist_json(c.dist), c.term.to_json()] for c in self.contributions
            ],
        }


@dataclass(frozen=True)
class CheckOutcome:
    """Checker verdict; on failure names the first violating vertex and its weight."""

    ok: bool
    vertex: int | None = None
    weight: Dyadic | None = None

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {"ok": self.ok}
        if self.vertex is not None and self.weight is not None:
            out["violation"] = {"vertex": self.vertex, "weight": self.weight.to_json()}
        return out


def dist_rel(g: Graph, s: VertexSetLike, u: int, v: int) -> ExtendedDist:
    """
    Length of a shortest u-v path with exactly one endvertex in S and no
    internal vertex in S. Definitional: one BFS per target, used as oracle.
    """
    members = as_vertex_set(s, g.n)
    if v not in members:
        raise InvalidGraphError(f"target {v} is not in S")
    if u == v:
        return 0
    if u in members:
        return INFINITY
    blocked = members.as_frozenset - {v}
    return bfs_avoiding(g, u, blocked)[v]


def dists_into(g: Graph, blocked: AbstractSet[int], u: int) -> dict[int, ExtendedDist]:
    # u is not blocked: one BFS in G - S, then each v in S steps in from a non-S neighbor
    dist = bfs_avoiding(g, u, blocked)
    out: dict[int, ExtendedDist] = {}
    for v in sorted(blocked):
        best = min((dist[x] for x in g.adj[v] if x not in blocked), default=INFINITY)
        out[v] = best + 1
    return out


def all_dists_from(g: Graph, s: VertexSetLike, u: int) -> dict[int, ExtendedDist]:
    """dist_rel(G, S, u, v) for every v in S with a single BFS."""
    members = as_vertex_set(s, g.n)
    if u in members:
        return {v: (0 if v == u else INFINITY) for v in members}
    return dists_into(g, members.as_frozenset, u)


def weight(g: Graph, s: VertexSetLike, u: int) -> WeightReport:
    members = as_vertex_set(s, g.n)
    if not 0 <= u < g.n:
        raise InvalidGraphError(f"vertex {u} out of range for n={g.n}")
    dists = all_dists_from(g, members, u)
    contributions = tuple(Contribution(v, d, Dyadic.decay(d)) for v, d in dists.items())
    return WeightReport(u, dyadic_sum(c.term for c in contributions), contributions)


def received_weight(g: Graph, others: AbstractSet[int], u: int) -> Dyadic:
    """w_(G, others)(u) for a vertex u outside ``others``; no validation."""
    if not others:
        return ZERO
    return dyadic_sum(Dyadic.decay(d) for d in dists_into(g, others, u).values())


def scaled_weight(g: Graph, s_mask: int, u: int) -> int:
    """
    w_(G,S)(u) * 2**n as an integer, with S given as a bitmask. Layered BFS
    over adjacency masks that stops at members of S; no validation.
    """
    if s_mask >> u & 1:
        return 2 << g.n
    seen = frontier = 1 << u
    total = 0
    d = 0
    while frontier:
        d += 1
        reached = 0
        while frontier:
            low = frontier & -frontier
            reached |= g.masks[low.bit_length() - 1]
            frontier ^= low
        reached &= ~seen
        seen |= reached
        hit = reached & s_mask
        if hit:
            total += hit.bit_count() << (g.n - d + 1)
        frontier = reached & ~s_mask
    return total


def is_exponential_independent(g: Graph, s: VertexSetLike) -> CheckOutcome:
    """Every u in S must receive weight strictly below 1 from S - {u}."""
    members = as_vertex_set(s, g.n)
    full = members.as_frozenset
    for u in members:
        w = received_weight(g, full - {u}, u)
        if w >= ONE:
            return CheckOutcome(False, u, w)
    return CheckOutcome(True)


def is_exponential_dominating(g: Graph, s: VertexSetLike) -> CheckOutcome:
    """Every vertex outside S must receive weight at least 1 from S."""
    members = as_vertex_set(s, g.n)
    full = members.as_frozenset
    for u in range(g.n):
        if u in full:
            continue
        w = received_weight(g, full, u)
        if w < ONE:
            return CheckOutcome(False, u, w)
    return CheckOutcome(True)


def is_independent(g: Graph, s: VertexSetLike) -> CheckOutcome:
    members = as_vertex_set(s, g.n)
    mask = members.mask
    for u in members:
        if g.masks[u] & mask:
            return CheckOutcome(False, u)
    return CheckOutcome(True)


def full_binary_witness(g: Graph, s: VertexSetLike, u: int) -> list[tuple[int, int]] | None:
    """
    Edges of a subtree T containing u such that T rooted at u is a full
    binary tree whose leaves are exactly S ∩ V(T), or None if none exists.
    A single vertex u in S is such a tree (returned as an empty edge list).
    """
    members = as_vertex_set(s, g.n).as_frozenset
    if u in members:
        return []
    used = {u}
    edges: list[tuple[int, int]] = []

    def grow(pending: list[int]) -> bool:
        if not pending:
            return True
        x, rest = pending[0], pending[1:]
        free = [y for y in g.adj[x] if y not in used]
        for a, b in combinations(free, 2):
            used.update((a, b))
            edges.extend(((x, a), (x, b)))
            if grow(rest + [y for y in (a, b) if y not in members]):
                return True
            del edges[-2:]
            used.difference_update((a, b))
        return False

    return edges if grow([u]) else None
