"""Equality characterizations: forbidden induced subgraphs, heredity, trees, extremal bounds."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Any

from .config import strict_mode
from .errors import ConsistencyError, InvalidGraphError
from .families import FamilyDescriptor, is_full_binary, t_membership, theorem2_construction
from .graph import (
    Graph,
    VertexSet,
    diameter,
    induced_subgraph,
    is_connected,
    is_tree,
    require_connected,
    require_tree,
)
from .solver import DEFAULT_NODE_BUDGET, alpha, alpha_e

logger = logging.getLogger(__name__)

DEFAULT_HEREDITARY_CAP = 10

CLAW = "K1,3"
P5 = "P5"
BULL = "bull"

# On five vertices these degree sequences force the pattern, up to connectivity for P5.
_P5_DEGREES = (1, 1, 2, 2, 2)
_BULL_DEGREES = (1, 1, 2, 3, 3)


def _alarm(message: str, strict: bool | None) -> None:
    if strict if strict is not None else strict_mode():
        raise ConsistencyError(message)
    logger.warning("consistency alarm: %s", message)


@dataclass(frozen=True)
class PatternCheck:
    ok: bool
    witness: VertexSet | None = None
    pattern: str | None = None

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {"free": self.ok}
        if self.witness is not None:
            out["pattern"] = self.pattern
            out["witness"] = list(self.witness)
        return out


def _induced_degrees(g: Graph, vertices: tuple[int, ...]) -> tuple[Graph, tuple[int, ...]]:
    h, _ = induced_subgraph(g, vertices)
    return h, tuple(sorted(h.degrees))


def _find_claw(g: Graph) -> VertexSet | None:
    for quad in combinations(range(g.n), 4):
        if all(g.degree(v) < 3 for v in quad):
            continue
        _, deg = _induced_degrees(g, quad)
        if deg == (1, 1, 1, 3):
            return VertexSet(quad)
    return None


def is_cpb_free(g: Graph) -> PatternCheck:
    """
    Whether G has no induced K1,3, P5 or bull. On failure the first offending
    vertex set in lexicographic order is returned, claws checked first.
    """
    claw = _find_claw(g)
    if claw is not None:
        return PatternCheck(False, claw, CLAW)
    for five in combinations(range(g.n), 5):
        h, deg = _induced_degrees(g, five)
        if deg == _P5_DEGREES and is_connected(h):
            return PatternCheck(False, VertexSet(five), P5)
        if deg == _BULL_DEGREES:
            return PatternCheck(False, VertexSet(five), BULL)
    return PatternCheck(True)


@dataclass(frozen=True)
class HereditaryResult:
    ok: bool
    counterexample: VertexSet | None = None
    alpha_e: int | None = None
    alpha: int | None = None

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {"hereditary_equality": self.ok}
        if self.counterexample is not None:
            out["counterexample"] = {
                "vertices": list(self.counterexample),
                "alpha_e": self.alpha_e,
                "alpha": self.alpha,
            }
        return out


def hereditary_equality(
    g: Graph, cap: int = DEFAULT_HEREDITARY_CAP, node_budget: int = DEFAULT_NODE_BUDGET
) -> HereditaryResult:
    """α_e(H) = α(H) for every nonempty induced subgraph H, by enumerating subsets."""
    if g.n > cap:
        raise InvalidGraphError(f"hereditary check is capped at n <= {cap}, got n={g.n}")
    for size in range(1, g.n + 1):
        for subset in combinations(range(g.n), size):
            h, _ = induced_subgraph(g, subset)
            a_e = alpha_e(h, node_budget).value
            a = alpha(h, node_budget).value
            if a_e != a:
                return HereditaryResult(False, VertexSet(subset), a_e, a)
    return HereditaryResult(True)


@dataclass(frozen=True)
class TreeEquality:
    equal: bool
    alpha_e: int
    alpha: int
    member: FamilyDescriptor | None

    def to_json(self) -> dict[str, Any]:
        return {
            "equal": self.equal,
            "alpha_e": self.alpha_e,
            "alpha": self.alpha,
            "member": self.member.name if self.member is not None else None,
        }


def tree_equality(
    t: Graph,
    strict: bool | None = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
    threads: int = 1,
) -> TreeEquality:
    """
    α_e(T) = α(T) decided by the solver, cross-checked against membership
    in the family 𝒯. The solver's answer is returned.
    """
    require_tree(t)
    a_e = alpha_e(t, node_budget, threads).value
    a = alpha(t, node_budget, threads).value
    member = t_membership(t)
    equal = a_e == a
    if equal != (member is not None):
        _alarm(
            f"solver says alpha_e {'=' if equal else '!='} alpha on a tree with n={t.n} "
            f"but family membership is {member.name if member else 'none'}",
            strict,
        )
    return TreeEquality(equal, a_e, a, member)


def _fraction_json(q: Fraction) -> dict[str, int]:
    return {"num": q.numerator, "den": q.denominator}


@dataclass(frozen=True)
class ExtremalReport:
    n: int
    diam: int
    alpha: int
    alpha_e: int
    lower_bound: Fraction
    upper_bound: Fraction
    meets_lower: bool
    meets_upper: bool
    is_path_5k: bool
    is_full_binary: bool
    construction_size: int

    def to_json(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "diam": self.diam,
            "alpha": self.alpha,
            "alpha_e": self.alpha_e,
            "lower_bound": _fraction_json(self.lower_bound),
            "upper_bound": _fraction_json(self.upper_bound),
            "meets_lower": self.meets_lower,
            "meets_upper": self.meets_upper,
            "is_path_5k": self.is_path_5k,
            "is_full_binary": self.is_full_binary,
            "construction_size": self.construction_size,
        }


def classify_extremal(
    g: Graph,
    strict: bool | None = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
    threads: int = 1,
) -> ExtremalReport:
    """Where α_e(G) sits between the diameter lower bound and the (n+1)/2 upper bound."""
    require_connected(g)
    diam = int(diameter(g))
    a_e = alpha_e(g, node_budget, threads).value
    a = alpha(g, node_budget, threads).value
    lower = Fraction(2 * diam + 2, 5)
    upper = Fraction(g.n + 1, 2)
    tree = is_tree(g)
    report = ExtremalReport(
        n=g.n,
        diam=diam,
        alpha=a,
        alpha_e=a_e,
        lower_bound=lower,
        upper_bound=upper,
        meets_lower=a_e == lower,
        meets_upper=a_e == upper,
        is_path_5k=tree and g.max_degree <= 2 and g.n % 5 == 0,
        is_full_binary=is_full_binary(g).ok,
        construction_size=len(theorem2_construction(g)),
    )
    if a_e < lower or a_e > upper:
        _alarm(f"alpha_e={a_e} outside [{lower}, {upper}] on n={g.n}", strict)
    if report.meets_upper != report.is_full_binary:
        _alarm(
            f"upper bound equality {report.meets_upper} but full binary {report.is_full_binary}",
            strict,
        )
    if tree and report.meets_lower != report.is_path_5k:
        _alarm(
            f"lower bound equality {report.meets_lower} but path with 5 | n {report.is_path_5k}",
            strict,
        )
    return report
