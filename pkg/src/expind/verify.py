"""Reproducible verification suites, one per published result, reported as JSON lines."""

from __future__ import annotations

import json
import logging
import random
import time
from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass, field
from typing import Any

from pydantic import BaseModel, Field, computed_field

from . import solver
from .characterize import hereditary_equality, is_cpb_free
from .config import RunConfig
from .errors import BudgetExceededError, ExpindError, GraphFormatError, InvalidGraphError
from .families import (
    FamilyKind,
    enumerate_full_binary,
    family_alpha_e,
    family_max_sets,
    generate,
    is_full_binary,
    t_membership,
    theorem2_construction,
    theorem4_construction,
)
from .formats import encode_graph6, iter_graph6
from .graph import (
    Graph,
    VertexSet,
    diameter,
    enumerate_labeled_graphs,
    induced_subgraph,
    is_connected,
)
from .trees import enumerate_free_trees
from .weights import (
    all_dists_from,
    dist_rel,
    full_binary_witness,
    is_exponential_independent,
    scaled_weight,
    weight,
)

logger = logging.getLogger(__name__)

RANDOM_GRAPHS = 200
SUBSETS_PER_WITNESS = 500
SUBGRAPH_SAMPLES = 100
RANDOM_CONNECTED = 500
RANDOM_CONNECTED_MAX_N = 14
LABELED_CONNECTED_MAX_N = 6
ORACLE_RANDOM_INSTANCES = 1000
ORACLE_RANDOM_MAX_N = 12
ORACLE_SOLVER_SAMPLES = 300
ORACLE_SOLVER_MAX_N = 7

Mismatch = tuple[object, object]


class UnknownSuiteError(ExpindError, ValueError):
    """No verification suite is registered under the requested id."""


class FailureRecord(BaseModel):
    graph: str
    expected: str
    got: str
    reason: str | None = None


class VerificationReport(BaseModel):
    theorem_id: str
    parameter_range: str
    seed: int
    instances_checked: int = Field(gt=0)
    failures: list[FailureRecord] = Field(default_factory=list)
    elapsed: float = 0.0

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return not self.failures

    def json_lines(self) -> Iterator[str]:
        """Header, one line per failure, then the summary."""
        yield _dumps(
            {
                "type": "header",
                "theorem_id": self.theorem_id,
                "parameter_range": self.parameter_range,
                "seed": self.seed,
            }
        )
        for f in self.failures:
            yield _dumps({"type": "failure", **f.model_dump()})
        yield _dumps(
            {
                "type": "summary",
                "instances_checked": self.instances_checked,
                "failures": len(self.failures),
                "passed": self.passed,
                "elapsed_ms": round(self.elapsed * 1000),
            }
        )


def _dumps(obj: dict[str, Any]) -> str:
    return json.dumps(obj, ensure_ascii=False)


def _differ(expected: object, got: object) -> Mismatch | None:
    return None if expected == got else (expected, got)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _from_mask(mask: int, n: int) -> VertexSet:
    return VertexSet(tuple(v for v in range(n) if mask >> v & 1))


def _error_reason(e: ExpindError) -> str:
    if isinstance(e, InvalidGraphError | GraphFormatError):
        return "invalid input"
    return type(e).__name__


@dataclass
class _Run:
    config: RunConfig
    max_n: int
    rng: random.Random
    instances: int = 0
    failures: list[FailureRecord] = field(default_factory=list)

    def check(self, g: Graph, probe: Callable[[Graph], Mismatch | None]) -> None:
        self.instances += 1
        try:
            mismatch = probe(g)
        except BudgetExceededError as e:
            self.failures.append(
                FailureRecord(
                    graph=encode_graph6(g),
                    expected="solved within budget",
                    got=f"lower bound {e.lower_bound} after {e.nodes} nodes",
                    reason="budget exceeded",
                )
            )
            return
        except ExpindError as e:
            self.failures.append(
                FailureRecord(
                    graph=encode_graph6(g),
                    expected="a checkable instance",
                    got=str(e),
                    reason=_error_reason(e),
                )
            )
            return
        if mismatch is not None:
            expected, got = mismatch
            self.failures.append(
                FailureRecord(graph=encode_graph6(g), expected=str(expected), got=str(got))
            )

    def check_all(self, graphs: Iterable[Graph], probe: Callable[[Graph], Mismatch | None]) -> None:
        for g in graphs:
            self.check(g, probe)

    def alpha_e(self, g: Graph) -> solver.SolveResult:
        return solver.alpha_e(g, self.config.node_budget, self.config.threads)

    def alpha(self, g: Graph) -> solver.SolveResult:
        return solver.alpha(g, self.config.node_budget, self.config.threads)

    def all_max(self, g: Graph) -> solver.AllMaxResult:
        return solver.alpha_e_all_max(g, self.config.node_budget, self.config.threads)

    def random_graph(self, n: int, p: float = 0.4) -> Graph:
        pairs = [(u, v) for v in range(n) for u in range(v)]
        return Graph.from_edges(n, [e for e in pairs if self.rng.random() < p])

    def random_connected(self, n: int, p: float = 0.2) -> Graph:
        tree = {(self.rng.randrange(v), v) for v in range(1, n)}
        extra = {(u, v) for v in range(n) for u in range(v) if self.rng.random() < p}
        return Graph.from_edges(n, sorted(tree | extra))

    def random_subset(self, vertices: Iterable[int], p: float = 0.5) -> VertexSet:
        return VertexSet.of(v for v in vertices if self.rng.random() < p)


Suite = Callable[[_Run], str]

SUITES: dict[str, tuple[Suite, int]] = {}


def suite(theorem_id: str, default_max_n: int) -> Callable[[Suite], Suite]:
    def register(fn: Suite) -> Suite:
        SUITES[theorem_id] = (fn, default_max_n)
        return fn

    return register


def _free_trees(lo: int, hi: int) -> Iterator[Graph]:
    for n in range(lo, hi + 1):
        yield from enumerate_free_trees(n)


@suite("thm1i", default_max_n=12)
def _alpha_e_below_alpha(run: _Run) -> str:
    def probe(g: Graph) -> Mismatch | None:
        a_e, a = run.alpha_e(g).value, run.alpha(g).value
        return None if a_e <= a else (f"alpha_e <= {a}", a_e)

    run.check_all(
        (run.random_graph(run.rng.randint(1, run.max_n)) for _ in range(RANDOM_GRAPHS)), probe
    )
    return f"{RANDOM_GRAPHS} random graphs, 1 <= n <= {run.max_n}"


@suite("thm1ii", default_max_n=10)
def _subgraph_monotonicity(run: _Run) -> str:
    def probe(g: Graph) -> Mismatch | None:
        s = run.alpha_e(g).witness
        keep = s.as_frozenset | run.random_subset(range(g.n), 0.7).as_frozenset
        h0, old = induced_subgraph(g, keep)
        h = Graph.from_edges(h0.n, [e for e in h0.edges() if run.rng.random() < 0.7])
        index = {o: i for i, o in enumerate(old)}
        moved = VertexSet.of(index[v] for v in s)
        outcome = is_exponential_independent(h, moved)
        return None if outcome.ok else (f"{s} stays exponential independent", outcome.to_json())

    run.check_all(
        (run.random_graph(run.rng.randint(1, run.max_n)) for _ in range(SUBGRAPH_SAMPLES)), probe
    )
    return f"{SUBGRAPH_SAMPLES} random graphs with random subgraphs, 1 <= n <= {run.max_n}"


@suite("thm1iii", default_max_n=12)
def _subsets_stay_independent(run: _Run) -> str:
    def probe(g: Graph) -> Mismatch | None:
        s = run.alpha_e(g).witness
        for _ in range(SUBSETS_PER_WITNESS):
            sub = run.random_subset(s)
            outcome = is_exponential_independent(g, sub)
            if not outcome.ok:
                return f"{sub} is exponential independent", outcome.to_json()
        return None

    run.check_all(
        (run.random_graph(run.rng.randint(1, run.max_n)) for _ in range(RANDOM_GRAPHS)), probe
    )
    return f"{RANDOM_GRAPHS} random graphs x {SUBSETS_PER_WITNESS} subsets, 1 <= n <= {run.max_n}"


def _diameter_bound_probe(run: _Run, trees: bool) -> Callable[[Graph], Mismatch | None]:
    def probe(g: Graph) -> Mismatch | None:
        diam = int(diameter(g))
        a_e = run.alpha_e(g).value
        if 5 * a_e < 2 * diam + 2:
            return f"alpha_e >= (2*{diam}+2)/5", a_e
        if trees:
            path_5k = g.max_degree <= 2 and g.n % 5 == 0
            if (5 * a_e == 2 * diam + 2) != path_5k:
                return f"lower bound tight iff path with 5 | n ({path_5k})", a_e
        s = theorem2_construction(g)
        if not is_exponential_independent(g, s).ok:
            return "construction is exponential independent", s
        bound = _ceil_div(2 * diam + 2, 5)
        return None if len(s) >= bound else (f"construction size >= {bound}", len(s))

    return probe


@suite("thm2", default_max_n=12)
def _diameter_lower_bound(run: _Run) -> str:
    run.check_all(_free_trees(1, run.max_n), _diameter_bound_probe(run, trees=True))
    run.check_all(
        (
            run.random_connected(run.rng.randint(1, RANDOM_CONNECTED_MAX_N))
            for _ in range(RANDOM_CONNECTED)
        ),
        _diameter_bound_probe(run, trees=False),
    )
    return (
        f"free trees 1 <= n <= {run.max_n}, "
        f"{RANDOM_CONNECTED} random connected graphs 1 <= n <= {RANDOM_CONNECTED_MAX_N}"
    )


@suite("thm2b", default_max_n=12)
def _order_upper_bound(run: _Run) -> str:
    def probe(g: Graph) -> Mismatch | None:
        a_e = run.alpha_e(g).value
        if 2 * a_e > g.n + 1:
            return f"alpha_e <= ({g.n}+1)/2", a_e
        fbt = is_full_binary(g).ok
        return _differ(fbt, 2 * a_e == g.n + 1)

    run.check_all(_free_trees(1, run.max_n), probe)
    top = min(run.max_n, LABELED_CONNECTED_MAX_N)
    for n in range(1, top + 1):
        run.check_all((g for g in enumerate_labeled_graphs(n) if is_connected(g)), probe)
    return f"free trees 1 <= n <= {run.max_n}, labeled connected graphs 1 <= n <= {top}"


@suite("thm3i", default_max_n=25)
def _paths(run: _Run) -> str:
    for n in range(1, run.max_n + 1):
        g, _ = generate(FamilyKind.PATH, n)
        run.check(g, lambda g: _differ(_ceil_div(2 * g.n, 5), run.alpha_e(g).value))
    return f"paths 1 <= n <= {run.max_n}"


@suite("thm3ii", default_max_n=20)
def _cycles(run: _Run) -> str:
    for n in range(5, run.max_n + 1):
        g, _ = generate(FamilyKind.CYCLE, n)
        run.check(g, lambda g: _differ(2 * g.n // 5, run.alpha_e(g).value))
    return f"cycles 5 <= n <= {run.max_n}"


@suite("thm3iii", default_max_n=15)
def _full_binary_leaves(run: _Run) -> str:
    def probe(g: Graph) -> Mismatch | None:
        leaves = VertexSet.of(v for v in range(g.n) if g.degree(v) <= 1)
        result = run.all_max(g)
        return _differ(((g.n + 1) // 2, [leaves]), (result.value, list(result.witnesses)))

    for n in range(1, run.max_n + 1, 2):
        run.check_all(enumerate_full_binary(n), probe)
    return f"full binary trees, odd 1 <= n <= {run.max_n}"


@suite("thm4", default_max_n=14)
def _subcubic_trees(run: _Run) -> str:
    def probe(g: Graph) -> Mismatch | None:
        bound = _ceil_div(2 * g.n + 8, 13)
        a_e = run.alpha_e(g).value
        if a_e < bound:
            return f"alpha_e >= {bound}", a_e
        s = theorem4_construction(g)
        if not is_exponential_independent(g, s).ok:
            return "construction is exponential independent", s
        return None if len(s) >= bound else (f"construction size >= {bound}", len(s))

    trees = (t for t in _free_trees(4, run.max_n) if t.max_degree <= 3)
    run.check_all(trees, probe)
    return f"subcubic free trees 4 <= n <= {run.max_n}"


@suite("thm5", default_max_n=5)
def _forbidden_subgraphs(run: _Run) -> str:
    def probe(g: Graph) -> Mismatch | None:
        hereditary = hereditary_equality(g, node_budget=run.config.node_budget)
        return _differ(is_cpb_free(g).ok, hereditary.ok)

    run.check_all(enumerate_labeled_graphs(run.max_n), probe)
    described = f"labeled graphs n = {run.max_n}"
    if run.config.graph6_file is not None:
        run.check_all(iter_graph6(run.config.graph6_file), probe)
        described += f", graphs from {run.config.graph6_file.name}"
    return described


@suite("thm6", default_max_n=14)
def _tree_equality(run: _Run) -> str:
    def probe(g: Graph) -> Mismatch | None:
        equal = run.alpha_e(g).value == run.alpha(g).value
        member = t_membership(g)
        return _differ(member is not None, equal)

    run.check_all(_free_trees(1, run.max_n), probe)
    return f"free trees 1 <= n <= {run.max_n}"


@suite("lem1", default_max_n=7)
def _weight_at_most_two(run: _Run) -> str:
    sets = run.config.sets_per_graph

    def probe(g: Graph) -> Mismatch | None:
        # u in S has weight exactly 2 and is its own certificate
        low_degree = [u for u in range(g.n) if g.degree(u) <= 2]
        cap = 2 << g.n
        drawn: set[int] = set()
        for _ in range(sets):
            s_mask = run.rng.getrandbits(g.n)
            if s_mask in drawn:
                continue
            drawn.add(s_mask)
            for u in low_degree:
                if s_mask >> u & 1:
                    continue
                w = scaled_weight(g, s_mask, u)
                if w < cap:
                    continue
                s = _from_mask(s_mask, g.n)
                if w > cap:
                    return f"w({u}) <= 2 for S={s}", str(weight(g, s, u).weight)
                if full_binary_witness(g, s, u) is None:
                    return f"w({u}) = 2 has a full binary certificate for S={s}", "none found"
        return None

    for n in range(1, run.max_n + 1):
        run.check_all(enumerate_labeled_graphs(n, max_degree=3), probe)
    return f"subcubic labeled graphs 1 <= n <= {run.max_n}, {sets} random sets each"


@suite("lem2", default_max_n=6)
def _family_max_sets(run: _Run) -> str:
    members = [generate(FamilyKind.P1), generate(FamilyKind.P8)]
    for kind in (FamilyKind.T1, FamilyKind.T2, FamilyKind.T3, FamilyKind.T4, FamilyKind.T5):
        first = 3 if kind == FamilyKind.T4 else 1
        members.extend(generate(kind, k) for k in range(first, run.max_n + 1))
    for g, desc in members:
        expected_sets = family_max_sets(desc)

        def probe(g: Graph, expected_sets: list[VertexSet] = expected_sets) -> Mismatch | None:
            result = run.all_max(g)
            if result.value != run.alpha(g).value:
                return "alpha_e = alpha", result.value
            return _differ(expected_sets, list(result.witnesses))

        run.check(g, probe)
        if desc.kind not in (FamilyKind.P1, FamilyKind.P8):
            expected = family_alpha_e(desc.kind, desc.k)
            run.check(g, lambda g, e=expected: _differ(e, run.alpha_e(g).value))
    return f"P1, P8 and T1..T5 with k <= {run.max_n}"


@suite("oracle", default_max_n=10)
def _oracles(run: _Run) -> str:
    def dist_probe(s: VertexSet) -> Callable[[Graph], Mismatch | None]:
        def probe(g: Graph) -> Mismatch | None:
            for u in range(g.n):
                fast = all_dists_from(g, s, u)
                slow = {v: dist_rel(g, s, u, v) for v in s}
                if fast != slow:
                    return (f"dist_rel from {u} with S={s}", slow), fast
            return None

        return probe

    for t in _free_trees(1, run.max_n):
        for mask in range(1 << t.n):
            run.check(t, dist_probe(_from_mask(mask, t.n)))
    for _ in range(ORACLE_RANDOM_INSTANCES):
        g = run.random_graph(run.rng.randint(1, ORACLE_RANDOM_MAX_N))
        run.check(g, dist_probe(run.random_subset(range(g.n))))

    def solver_probe(g: Graph) -> Mismatch | None:
        exhaustive = solver.brute_force_alpha_e(g)
        found = run.alpha_e(g)
        listed = run.all_max(g)
        return _differ(
            (exhaustive.value, exhaustive.witnesses[0], exhaustive.witnesses),
            (found.value, found.witness, listed.witnesses),
        )

    run.check_all(
        (
            run.random_graph(run.rng.randint(1, ORACLE_SOLVER_MAX_N))
            for _ in range(ORACLE_SOLVER_SAMPLES)
        ),
        solver_probe,
    )
    return (
        f"trees 1 <= n <= {run.max_n} with every S, {ORACLE_RANDOM_INSTANCES} random distance instances "
        f"n <= {ORACLE_RANDOM_MAX_N}, {ORACLE_SOLVER_SAMPLES} random solver instances "
        f"n <= {ORACLE_SOLVER_MAX_N}"
    )


def verify(theorem_id: str, config: RunConfig | None = None) -> VerificationReport:
    """Run one suite under ``config`` and return its report."""
    if theorem_id not in SUITES:
        known = ", ".join(sorted(SUITES))
        raise UnknownSuiteError(f"unknown theorem id {theorem_id!r}; known: {known}")
    config = config or RunConfig()
    fn, default_max_n = SUITES[theorem_id]
    run = _Run(config, config.max_n or default_max_n, random.Random(config.seed))
    logger.info("verifying %s up to n=%d (seed %d)", theorem_id, run.max_n, config.seed)
    start = time.perf_counter()
    parameter_range = fn(run)
    elapsed = time.perf_counter() - start
    if run.instances == 0:
        raise InvalidGraphError(f"{theorem_id}: no instances in range ({parameter_range})")
    report = VerificationReport(
        theorem_id=theorem_id,
        parameter_range=parameter_range,
        seed=config.seed,
        instances_checked=run.instances,
        failures=run.failures,
        elapsed=elapsed,
    )
    logger.info(
        "%s: %d instances, %d failures, %.1fs",
        theorem_id,
        report.instances_checked,
        len(report.failures),
        elapsed,
    )
    return report
