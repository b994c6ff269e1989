"""Exact α_e and α by backtracking with certified witnesses."""

from __future__ import annotations

import logging
import threading
import time
from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Literal

from .dyadic import ONE, Dyadic, dyadic_sum
from .errors import BudgetExceededError, ConsistencyError, InvalidGraphError
from .graph import INFINITY, Graph, VertexSet
from .weights import (
    dists_into,
    is_exponential_independent,
    is_independent,
    received_weight,
)

logger = logging.getLogger(__name__)

DEFAULT_NODE_BUDGET = 10**8

Invariant = Literal["alpha_e", "alpha"]


@dataclass(frozen=True)
class SolveResult:
    invariant: Invariant
    value: int
    witness: VertexSet
    nodes_explored: int
    elapsed: float

    def to_json(self) -> dict[str, Any]:
        return {
            "invariant": self.invariant,
            "value": self.value,
            "witness": list(self.witness),
            "nodes": self.nodes_explored,
            "ms": round(self.elapsed * 1000),
        }


@dataclass(frozen=True)
class AllMaxResult:
    value: int
    witnesses: tuple[VertexSet, ...]
    nodes_explored: int = 0
    elapsed: float = 0.0

    def to_json(self) -> dict[str, Any]:
        return {
            "invariant": "alpha_e",
            "value": self.value,
            "witnesses": [list(w) for w in self.witnesses],
            "nodes": self.nodes_explored,
            "ms": round(self.elapsed * 1000),
        }


class _BudgetTripped(Exception):
    pass


class _Shared:
    """State shared by all workers: node budget and the best value seen anywhere."""

    def __init__(self, budget: int) -> None:
        self.budget = budget
        self.nodes = 0
        self.best = 0
        self.best_witness: tuple[int, ...] = ()
        self._lock = threading.Lock()

    def tick(self) -> None:
        with self._lock:
            self.nodes += 1
            if self.nodes > self.budget:
                raise _BudgetTripped

    def offer(self, members: list[int]) -> None:
        with self._lock:
            if len(members) > self.best:
                self.best = len(members)
                self.best_witness = tuple(members)


def _clique_cover(g: Graph, cand: int) -> int:
    """Greedy clique cover size of the candidate set; bounds its independence number."""
    cliques: list[int] = []
    while cand:
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        nbrs = g.masks[v]
        for i, clique in enumerate(cliques):
            if clique & ~nbrs == 0:
                cliques[i] = clique | low
                break
        else:
            cliques.append(low)
    return len(cliques)


CanAdd = Callable[[Graph, frozenset[int], int], bool]


def _keeps_eis(g: Graph, members: frozenset[int], v: int) -> bool:
    """
    Whether members ∪ {v} is exponential independent, given that members is.
    Only members reachable from v in G - members can change their weight.
    """
    reach = {u: d for u, d in dists_into(g, members, v).items() if d != INFINITY}
    if dyadic_sum(Dyadic.decay(d) for d in reach.values()) >= ONE:
        return False
    grown = members | {v}
    return all(received_weight(g, grown - {u}, u) < ONE for u in reach)


def _always(g: Graph, members: frozenset[int], v: int) -> bool:
    return True


@dataclass
class _Worker:
    g: Graph
    can_add: CanAdd
    collect_all: bool
    shared: _Shared
    best: int = 0
    witnesses: list[tuple[int, ...]] = field(default_factory=list)

    def worth(self, bound: int) -> bool:
        if bound < self.shared.best:
            return False
        return bound >= self.best if self.collect_all else bound > self.best

    def record(self, members: list[int]) -> None:
        size = len(members)
        if size > self.best:
            self.best = size
            self.witnesses = [tuple(members)]
            self.shared.offer(members)
        elif self.collect_all and size == self.best:
            self.witnesses.append(tuple(members))

    def run(self, members: list[int], cand: int) -> None:
        self.shared.tick()
        self.record(members)
        size = len(members)
        if not self.worth(size + _clique_cover(self.g, cand)):
            return
        member_set = frozenset(members)
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            if self.can_add(self.g, member_set, v):
                members.append(v)
                self.run(members, cand & ~self.g.masks[v])
                members.pop()
            if not self.worth(size + _clique_cover(self.g, cand)):
                return


def _search(
    g: Graph, can_add: CanAdd, collect_all: bool, node_budget: int, threads: int
) -> tuple[int, list[tuple[int, ...]], int]:
    if g.n < 1:
        raise InvalidGraphError("the solver needs at least one vertex")
    shared = _Shared(node_budget)
    full = (1 << g.n) - 1
    try:
        if threads <= 1:
            worker = _Worker(g, can_add, collect_all, shared)
            worker.run([], full)
            return worker.best, worker.witnesses, shared.nodes

        def task(v: int) -> _Worker:
            w = _Worker(g, can_add, collect_all, shared)
            above = full & ~((1 << (v + 1)) - 1)
            w.run([v], above & ~g.masks[v])
            return w

        with ThreadPoolExecutor(max_workers=threads) as pool:
            workers = list(pool.map(task, range(g.n)))
    except _BudgetTripped:
        raise BudgetExceededError(shared.nodes, shared.best, shared.best_witness) from None
    value = max(w.best for w in workers)
    # workers are ordered by least member, which is lexicographic order on witnesses
    winners = [x for w in workers if w.best == value for x in w.witnesses]
    return value, winners if collect_all else winners[:1], shared.nodes


def alpha_e(
    g: Graph, node_budget: int = DEFAULT_NODE_BUDGET, threads: int = 1
) -> SolveResult:
    """Exponential independence number with the lexicographically least maximum EIS."""
    start = time.perf_counter()
    value, witnesses, nodes = _search(g, _keeps_eis, False, node_budget, threads)
    witness = VertexSet(witnesses[0])
    if not is_exponential_independent(g, witness).ok:
        raise ConsistencyError(f"solver witness {witness} is not exponential independent")
    elapsed = time.perf_counter() - start
    logger.debug("alpha_e=%d on n=%d after %d nodes", value, g.n, nodes)
    return SolveResult("alpha_e", value, witness, nodes, elapsed)


def alpha_e_all_max(
    g: Graph, node_budget: int = DEFAULT_NODE_BUDGET, threads: int = 1
) -> AllMaxResult:
    """Every maximum EIS, sorted lexicographically."""
    start = time.perf_counter()
    value, witnesses, nodes = _search(g, _keeps_eis, True, node_budget, threads)
    sets = tuple(VertexSet(w) for w in witnesses)
    for s in sets:
        if not is_exponential_independent(g, s).ok:
            raise ConsistencyError(f"solver witness {s} is not exponential independent")
    if list(sets) != sorted(set(sets)):
        raise ConsistencyError("all-max witnesses are not sorted and duplicate-free")
    return AllMaxResult(value, sets, nodes, time.perf_counter() - start)


def alpha(g: Graph, node_budget: int = DEFAULT_NODE_BUDGET, threads: int = 1) -> SolveResult:
    """Independence number with the lexicographically least maximum independent set."""
    start = time.perf_counter()
    value, witnesses, nodes = _search(g, _always, False, node_budget, threads)
    witness = VertexSet(witnesses[0])
    if not is_independent(g, witness).ok:
        raise ConsistencyError(f"solver witness {witness} is not independent")
    elapsed = time.perf_counter() - start
    logger.debug("alpha=%d on n=%d after %d nodes", value, g.n, nodes)
    return SolveResult("alpha", value, witness, nodes, elapsed)


def brute_force_alpha_e(g: Graph) -> AllMaxResult:
    """Exhaustive subset filter; the oracle the pruned search is tested against."""
    for k in range(g.n, -1, -1):
        found = tuple(
            VertexSet(c)
            for c in combinations(range(g.n), k)
            if is_exponential_independent(g, c).ok
        )
        if found:
            return AllMaxResult(k, found)
    return AllMaxResult(0, (VertexSet(),))
