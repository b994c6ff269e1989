from __future__ import annotations

import os
from pathlib import Path

import yaml
from pydantic import BaseModel, Field, ValidationError

from .solver import DEFAULT_NODE_BUDGET

THREADS_ENV = "EXPIND_THREADS"
STRICT_ENV = "EXPIND_STRICT"


class RunConfig(BaseModel):
    """Knobs shared by the solver front ends and the verification harness."""

    max_n: int | None = Field(default=None, ge=1)
    node_budget: int = Field(default=DEFAULT_NODE_BUDGET, ge=1)
    threads: int = Field(default=1, ge=1)
    seed: int = Field(default=0, ge=0, lt=2**64)
    sets_per_graph: int = Field(default=100, ge=1)
    output: Path | None = None
    graph6_file: Path | None = None
    strict: bool = False

    def with_env(self) -> RunConfig:
        """Apply EXPIND_THREADS and EXPIND_STRICT on top of the loaded values."""
        updates: dict[str, object] = {}
        threads = os.environ.get(THREADS_ENV)
        if threads:
            updates["threads"] = threads
        if strict_mode():
            updates["strict"] = True
        if not updates:
            return self
        try:
            return RunConfig.model_validate({**self.model_dump(), **updates})
        except ValidationError as e:
            raise SystemExit(f"Invalid {THREADS_ENV}:\n{e}") from e


def strict_mode() -> bool:
    return os.environ.get(STRICT_ENV, "") not in ("", "0")


def load_config(path: Path) -> RunConfig:
    """
    Load a YAML run config and return a validated RunConfig.
    Paths are resolved relative to the YAML file's parent.
    """
    raw = yaml.safe_load(Path(path).read_text(encoding="utf-8")) or {}
    if not isinstance(raw, dict):
        raise SystemExit(f"Config validation failed:\n{path} does not contain a mapping")
    base = Path(path).parent

    for key in ("output", "graph6_file"):
        if raw.get(key):
            raw[key] = str((base / raw[key]).resolve())

    try:
        return RunConfig(**raw)
    except ValidationError as e:
        raise SystemExit(f"Config validation failed:\n{e}") from e
