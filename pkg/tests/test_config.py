from __future__ import annotations

from pathlib import Path

import pytest

from expind.config import RunConfig, load_config, strict_mode
from expind.solver import DEFAULT_NODE_BUDGET


def test_load_config_ok(tmp_path: Path) -> None:
    p = tmp_path / "run.yaml"
    p.write_text(
        """
max_n: 9
node_budget: 5000
threads: 2
seed: 42
sets_per_graph: 25
output: out/report.jsonl
graph6_file: extra.g6
        """,
        encoding="utf-8",
    )
    cfg = load_config(p)
    assert isinstance(cfg, RunConfig)
    assert (cfg.max_n, cfg.node_budget, cfg.threads, cfg.seed) == (9, 5000, 2, 42)
    assert cfg.sets_per_graph == 25
    assert cfg.output == (tmp_path / "out" / "report.jsonl").resolve()
    assert cfg.graph6_file == (tmp_path / "extra.g6").resolve()


def test_empty_config_uses_defaults(tmp_path: Path) -> None:
    p = tmp_path / "empty.yaml"
    p.write_text("", encoding="utf-8")
    cfg = load_config(p)
    assert cfg.node_budget == DEFAULT_NODE_BUDGET
    assert cfg.max_n is None and cfg.threads == 1


@pytest.mark.parametrize(
    "body", ["threads: 0", "seed: -1", "max_n: zero", "sets_per_graph: 0", "- a list"]
)
def test_invalid_config_exits(tmp_path: Path, body: str) -> None:
    p = tmp_path / "bad.yaml"
    p.write_text(body, encoding="utf-8")
    with pytest.raises(SystemExit, match="Config validation failed"):
        load_config(p)


def test_env_overrides(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("EXPIND_THREADS", "4")
    cfg = RunConfig(seed=3).with_env()
    assert cfg.threads == 4 and cfg.seed == 3 and cfg.strict
    monkeypatch.setenv("EXPIND_THREADS", "none")
    with pytest.raises(SystemExit):
        RunConfig().with_env()


@pytest.mark.parametrize("value, expected", [("1", True), ("yes", True), ("0", False), ("", False)])
def test_strict_mode(monkeypatch: pytest.MonkeyPatch, value: str, expected: bool) -> None:
    monkeypatch.setenv("EXPIND_STRICT", value)
    assert strict_mode() is expected
