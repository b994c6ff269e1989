from __future__ import annotations

from collections.abc import Iterator

import pytest

from expind.families import FamilyKind, generate
from expind.graph import Graph


@pytest.fixture(autouse=True, scope="session")
def strict() -> Iterator[None]:
    # consistency alarms must fail the test run
    with pytest.MonkeyPatch.context() as mp:
        mp.setenv("EXPIND_STRICT", "1")
        mp.delenv("EXPIND_THREADS", raising=False)
        yield


@pytest.fixture
def p5() -> Graph:
    return generate(FamilyKind.PATH, 5)[0]


@pytest.fixture
def bull() -> Graph:
    return generate(FamilyKind.BULL)[0]


@pytest.fixture
def complete_fbt7() -> Graph:
    return generate(FamilyKind.FULL_BINARY, 7)[0]
