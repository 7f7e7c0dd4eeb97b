"""Pytest configuration and fixtures."""
from __future__ import annotations

from collections.abc import Generator

import pytest
from hypothesis import HealthCheck, settings
from loguru import logger

from typegraph.graphs import Graph
from typegraph.order_types import OrderType, parse_type
from typegraph.utils.settings import reset_settings

settings.register_profile(
    "typegraph",
    derandomize=True,
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("typegraph")


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch: pytest.MonkeyPatch) -> Generator[None, None, None]:
    """Every test starts from default settings, untouched by the environment."""
    for name in ("TYPEGRAPH_DEBUG", "TYPEGRAPH_BUDGET_NODES", "TYPEGRAPH_BUDGET_MS", "TYPEGRAPH_SEED"):
        monkeypatch.delenv(name, raising=False)
    reset_settings()
    yield
    reset_settings()


@pytest.fixture
def quiet_logger() -> Generator[None, None, None]:
    """Drop all loguru sinks for the duration of a test."""
    logger.remove()
    yield
    logger.remove()


@pytest.fixture
def catalogue() -> list[OrderType]:
    """Irreducible primary types of width at most 4."""
    return [
        parse_type(text)
        for text in (
            "12", "132", "1122", "1332", "13332", "11322",
            "111222", "112122", "113232", "113322", "131322",
        )
    ]


@pytest.fixture
def triangle() -> Graph:
    return Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def five_cycle() -> Graph:
    return Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])


@pytest.fixture
def k4() -> Graph:
    return Graph.from_edges(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
