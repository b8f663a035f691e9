"""Pytest configuration and shared fixtures."""

import pytest

from src.spectral.graphs import Graph, GraphKind, build


@pytest.fixture
def mock_env(monkeypatch) -> None:
    """Set up mock environment variables for testing.

    Args:
        monkeypatch: Pytest monkeypatch fixture
    """
    test_env = {
        "ENVIRONMENT": "testing",
        "LOG_LEVEL": "DEBUG",
        "UACG_TOL": "1e-9",
        "UACG_JOBS": "2",
    }

    for key, value in test_env.items():
        monkeypatch.setenv(key, value)


@pytest.fixture
def clean_env(monkeypatch) -> None:
    """Remove the UACG_* overrides so defaults apply."""
    for key in ("UACG_TOL", "UACG_JOBS"):
        monkeypatch.delenv(key, raising=False)


@pytest.fixture
def g5() -> Graph:
    """G_5: degrees [4, 3, 3, 3, 3], non-edges {1, 4} and {2, 3}."""
    return build(GraphKind.UACG, 5)


@pytest.fixture
def g6() -> Graph:
    return build(GraphKind.UACG, 6)


@pytest.fixture
def g9() -> Graph:
    """G_9: six vertices of degree 5 and three of degree 6."""
    return build(GraphKind.UACG, 9)
