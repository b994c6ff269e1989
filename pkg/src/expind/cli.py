from __future__ import annotations

import json
import logging
from collections.abc import Iterator
from contextlib import contextmanager
from enum import Enum
from pathlib import Path
from typing import Any

import typer
from pydantic import ValidationError
from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table

from . import __version__
from .characterize import classify_extremal, hereditary_equality, is_cpb_free, tree_equality
from .config import RunConfig, load_config
from .errors import BudgetExceededError, ExpindError
from .families import FamilyKind, enumerate_full_binary, generate, t_membership
from .formats import encode_graph6, read_graph, to_edge_list
from .graph import VertexSet
from .solver import alpha, alpha_e, alpha_e_all_max
from .trees import enumerate_free_trees
from .verify import SUITES, verify
from .weights import is_exponential_dominating, is_exponential_independent, weight

app = typer.Typer(
    help="expind – exact exponential independence for small graphs",
    no_args_is_help=True,
    pretty_exceptions_enable=False,
)
console = Console(stderr=True)
logger = logging.getLogger(__name__)

EXIT_FALSE = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3

SourceArg = typer.Argument(..., help="Edge-list file, or - for stdin.")
Graph6Opt = typer.Option(False, "--graph6", help="Read the input as graph6.")
BudgetOpt = typer.Option(None, "--node-budget", min=1, help="Search node budget.")
ThreadsOpt = typer.Option(None, "--threads", min=1, help="Solver worker threads.")


class ComputeTarget(str, Enum):
    ALPHA = "alpha"
    ALPHA_E = "alpha-e"
    ALL_MAX = "all-max"


class CheckTarget(str, Enum):
    EIS = "eis"
    EDS = "eds"


class EnumerateTarget(str, Enum):
    TREES = "trees"
    FBT = "fbt"


@contextmanager
def _exit_codes() -> Iterator[None]:
    """Map library errors onto the documented exit codes."""
    try:
        yield
    except BudgetExceededError as e:
        _emit(
            {
                "error": "budget_exceeded",
                "nodes": e.nodes,
                "lower_bound": e.lower_bound,
                "witness": list(e.witness),
            }
        )
        console.print(f"[red]✗ {e}[/]")
        raise typer.Exit(EXIT_BUDGET) from e
    except (ExpindError, OSError) as e:
        console.print(f"[red]✗ {e}[/]")
        raise typer.Exit(EXIT_INPUT) from e


def _emit(obj: dict[str, Any]) -> None:
    typer.echo(json.dumps(obj, ensure_ascii=False))


def _parse_set(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as e:
        raise typer.BadParameter(f"expected comma-separated vertex ids, got {text!r}") from e


def _run_config(config: Path | None = None, **overrides: Any) -> RunConfig:
    """Config file, then environment, then command-line flags."""
    try:
        base = load_config(config) if config is not None else RunConfig()
        base = base.with_env()
    except SystemExit as e:
        console.print(f"[red]✗ {e}[/]")
        raise typer.Exit(EXIT_INPUT) from None
    updates = {k: v for k, v in overrides.items() if v is not None}
    try:
        return RunConfig.model_validate({**base.model_dump(), **updates})
    except ValidationError as e:
        raise typer.BadParameter(str(e)) from e


@app.callback()
def _setup(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log at DEBUG level."),
) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        handlers=[RichHandler(console=console, show_path=False)],
        force=True,
    )


@app.command()
def version() -> None:
    """Print the package version."""
    typer.echo(__version__)


@app.command()
def compute(
    target: ComputeTarget,
    source: str = SourceArg,
    graph6: bool = Graph6Opt,
    node_budget: int | None = BudgetOpt,
    threads: int | None = ThreadsOpt,
) -> None:
    """Solve alpha, alpha_e, or list every maximum exponential independent set."""
    with _exit_codes():
        cfg = _run_config(node_budget=node_budget, threads=threads)
        g = read_graph(source, graph6=graph6)
        if target == ComputeTarget.ALPHA:
            _emit(alpha(g, cfg.node_budget, cfg.threads).to_json())
        elif target == ComputeTarget.ALPHA_E:
            _emit(alpha_e(g, cfg.node_budget, cfg.threads).to_json())
        else:
            _emit(alpha_e_all_max(g, cfg.node_budget, cfg.threads).to_json())


@app.command()
def check(
    target: CheckTarget,
    source: str = SourceArg,
    members: str = typer.Option(..., "--set", help="Comma-separated vertex ids, e.g. 1,4,7."),
    graph6: bool = Graph6Opt,
) -> None:
    """Check exponential independence or domination of a vertex set."""
    with _exit_codes():
        g = read_graph(source, graph6=graph6)
        s = VertexSet.of(_parse_set(members), g.n)
        if target == CheckTarget.EIS:
            outcome = is_exponential_independent(g, s)
        else:
            outcome = is_exponential_dominating(g, s)
        _emit(outcome.to_json())
    if not outcome.ok:
        raise typer.Exit(EXIT_FALSE)


@app.command(name="weight")
def weight_cmd(
    source: str = SourceArg,
    members: str = typer.Option(..., "--set", help="Comma-separated vertex ids."),
    vertex: int = typer.Option(..., "--vertex", help="Vertex whose weight is reported."),
    graph6: bool = Graph6Opt,
) -> None:
    """Exact weight a vertex receives from a set, with per-source contributions."""
    with _exit_codes():
        g = read_graph(source, graph6=graph6)
        _emit(weight(g, VertexSet.of(_parse_set(members), g.n), vertex).to_json())


@app.command()
def gen(
    family: FamilyKind,
    k: int | None = typer.Option(None, "--k", help="Family parameter."),
    n: int | None = typer.Option(None, "--n", help="Order (paths, cycles, stars, fbt)."),
    shape: str | None = typer.Option(None, "--shape", help="Rooted full binary shape code."),
    graph6: bool = typer.Option(False, "--graph6", help="Write graph6 instead of an edge list."),
    describe: bool = typer.Option(False, "--describe", help="Print the role labeling to stderr."),
) -> None:
    """Generate a member of a named family."""
    with _exit_codes():
        param = k
        if n is not None:
            param = n - 1 if family == FamilyKind.STAR else n
        g, desc = generate(family, param, shape)
        typer.echo(encode_graph6(g) if graph6 else to_edge_list(g), nl=graph6)
        if describe:
            console.print_json(desc.model_dump_json())


@app.command(name="family-check")
def family_check(
    source: str = SourceArg,
    graph6: bool = Graph6Opt,
    solve: bool = typer.Option(False, "--solve", help="Cross-check with the solver."),
) -> None:
    """Identify a tree as a member of the family with alpha_e = alpha."""
    with _exit_codes():
        g = read_graph(source, graph6=graph6)
        if solve:
            result = tree_equality(g)
            member = result.member
            _emit({**result.to_json(), "labeling": member.labeling if member else None})
        else:
            member = t_membership(g)
            _emit(
                {
                    "member": member.name if member else None,
                    "labeling": member.labeling if member else None,
                }
            )
    if member is None:
        raise typer.Exit(EXIT_FALSE)


@app.command(name="free-check")
def free_check(
    source: str = SourceArg,
    graph6: bool = Graph6Opt,
    hereditary: bool = typer.Option(
        False, "--hereditary", help="Also test alpha_e = alpha on every induced subgraph."
    ),
) -> None:
    """Look for an induced K1,3, P5 or bull."""
    with _exit_codes():
        g = read_graph(source, graph6=graph6)
        result = is_cpb_free(g)
        out = result.to_json()
        if hereditary:
            out.update(hereditary_equality(g).to_json())
        _emit(out)
    if not result.ok:
        raise typer.Exit(EXIT_FALSE)


@app.command()
def classify(
    source: str = SourceArg,
    graph6: bool = Graph6Opt,
    node_budget: int | None = BudgetOpt,
    threads: int | None = ThreadsOpt,
) -> None:
    """Compare alpha_e against the diameter and order bounds."""
    with _exit_codes():
        cfg = _run_config(node_budget=node_budget, threads=threads)
        g = read_graph(source, graph6=graph6)
        _emit(classify_extremal(g, cfg.strict, cfg.node_budget, cfg.threads).to_json())


@app.command(name="verify")
def verify_cmd(
    theorem_id: str = typer.Argument(..., help=f"One of: {', '.join(sorted(SUITES))}."),
    max_n: int | None = typer.Option(None, "--max-n", min=1),
    config: Path | None = typer.Option(None, "--config", help="YAML run config."),
    seed: int | None = typer.Option(None, "--seed", min=0),
    threads: int | None = ThreadsOpt,
    node_budget: int | None = BudgetOpt,
    output: Path | None = typer.Option(None, "--output", "-o", help="Write JSON lines here."),
    graph6_file: Path | None = typer.Option(None, "--graph6-file", help="Extra graphs (thm5)."),
    sets_per_graph: int | None = typer.Option(
        None, "--sets-per-graph", min=1, help="Random sets per graph (lem1)."
    ),
) -> None:
    """Run a verification suite and stream its report as JSON lines."""
    with _exit_codes():
        cfg = _run_config(
            config,
            max_n=max_n,
            seed=seed,
            threads=threads,
            node_budget=node_budget,
            output=output,
            graph6_file=graph6_file,
            sets_per_graph=sets_per_graph,
        )
        report = verify(theorem_id, cfg)
        lines = "\n".join(report.json_lines()) + "\n"
        if cfg.output is not None:
            cfg.output.write_text(lines, encoding="utf-8")
            console.print(f"[green]✓ Wrote[/] {cfg.output}")
        else:
            typer.echo(lines, nl=False)

    table = Table(title=f"verify {report.theorem_id}")
    for col in ("range", "instances", "failures", "seconds"):
        table.add_column(col)
    table.add_row(
        report.parameter_range,
        str(report.instances_checked),
        str(len(report.failures)),
        f"{report.elapsed:.1f}",
    )
    console.print(table)
    if not report.passed:
        raise typer.Exit(EXIT_FALSE)


@app.command(name="enumerate")
def enumerate_cmd(
    target: EnumerateTarget,
    n: int = typer.Option(..., "--n", min=1, help="Order of the trees."),
    count: bool = typer.Option(False, "--count", help="Print only how many there are."),
) -> None:
    """List free trees or full binary trees of order n, one graph6 line each."""
    with _exit_codes():
        if target == EnumerateTarget.TREES:
            graphs = enumerate_free_trees(n)
        else:
            graphs = enumerate_full_binary(n)
        total = 0
        for g in graphs:
            total += 1
            if not count:
                typer.echo(encode_graph6(g))
        if count:
            typer.echo(str(total))


@app.command()
def validate(config: Path) -> None:
    """Validate a YAML run config file."""
    try:
        load_config(config)
    except SystemExit as e:
        console.print(f"[red]✗ {e}[/]")
        raise typer.Exit(EXIT_INPUT) from None
    except OSError as e:
        console.print(f"[red]✗ {e}[/]")
        raise typer.Exit(EXIT_INPUT) from e
    console.print("[green]✓ Config is valid[/]")


def main() -> None:
    app()


if __name__ == "__main__":
    main()
