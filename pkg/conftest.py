import pytest

from config import WorkbenchSettings
from services.graph import LabeledGraph


def cycle(size: int) -> LabeledGraph:
    return LabeledGraph.from_edges(range(size), [(i, (i + 1) % size) for i in range(size)])


@pytest.fixture
def settings() -> WorkbenchSettings:
    return WorkbenchSettings()


@pytest.fixture
def small_settings() -> WorkbenchSettings:
    return WorkbenchSettings(construction_cap=200, oracle_cap=60, search_budget=200_000)


@pytest.fixture
def c5() -> LabeledGraph:
    return cycle(5)


@pytest.fixture
def c7() -> LabeledGraph:
    return cycle(7)


@pytest.fixture
def k4() -> LabeledGraph:
    return LabeledGraph.from_predicate(range(4), lambda u, v: True)


@pytest.fixture
def petersen() -> LabeledGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return LabeledGraph.from_edges(range(10), outer + spokes + inner)


@pytest.fixture
def looped_path() -> LabeledGraph:
    return LabeledGraph.from_edges(["a", "b", "c"], [("a", "b"), ("b", "c")], loops=["b"])
