"""Shared fixtures and the --run-slow switch."""

import os
from fractions import Fraction
from typing import Iterator

import pytest

from suig2.config import Settings, get_settings


def pytest_addoption(parser: pytest.Parser) -> None:
    parser.addoption(
        "--run-slow",
        action="store_true",
        default=False,
        help="Run long acceptance checks",
    )


def pytest_collection_modifyitems(config: pytest.Config, items: list) -> None:
    if config.getoption("--run-slow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --run-slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(autouse=True)
def clean_settings(monkeypatch: pytest.MonkeyPatch) -> Iterator[None]:
    """Keep SUIG2_* variables from the environment out of every test."""
    for key in list(os.environ):
        if key.startswith("SUIG2_"):
            monkeypatch.delenv(key)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def settings() -> Settings:
    return Settings(_env_file=None)


@pytest.fixture
def quarter_settings() -> Settings:
    return Settings(_env_file=None, epsilon="1/4")


@pytest.fixture
def half() -> Fraction:
    return Fraction(1, 2)
