from __future__ import annotations

import shutil
from pathlib import Path
from random import Random

import pytest

from woods.catalog import Catalog
from woods.catalog.store import PACKAGE_DATA_DIR
from woods.construct import CounterexampleEngine


@pytest.fixture(autouse=True)
def clean_env(monkeypatch: pytest.MonkeyPatch) -> None:
    for name in ("WOODS_DATA_DIR", "WOODS_PRECISION_BITS", "WOODS_ENUM_BUDGET"):
        monkeypatch.delenv(name, raising=False)


@pytest.fixture(scope="session")
def catalog() -> Catalog:
    return Catalog(PACKAGE_DATA_DIR)


@pytest.fixture(scope="session")
def engine(catalog: Catalog) -> CounterexampleEngine:
    return CounterexampleEngine(catalog)


@pytest.fixture()
def rng() -> Random:
    return Random(42)


@pytest.fixture()
def data_copy(tmp_path: Path) -> Path:
    target = tmp_path / "data"
    shutil.copytree(PACKAGE_DATA_DIR, target)
    return target
