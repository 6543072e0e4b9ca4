import pytest

from logger import configure_logger
from settings import settings
from src.bounds.magnitude import allow_long_digit_strings
from src.core.entities import Graph, SetSystem, SignColoring

configure_logger()
allow_long_digit_strings()


@pytest.fixture
def testing_mode(monkeypatch):
    monkeypatch.setattr(settings, "TESTING", True)


@pytest.fixture
def small_chunks(monkeypatch):
    """Force many prefixes so the enumeration really splits work."""
    monkeypatch.setattr(settings, "ENUMERATION_CHUNK_BITS", 4)


@pytest.fixture
def c5() -> Graph:
    return Graph.cycle(5)


@pytest.fixture
def k4() -> Graph:
    return Graph.complete(4)


@pytest.fixture
def singleton_system() -> SetSystem:
    """{M_1 = {2}} over [2]."""
    return SetSystem.from_lists(2, [[1]])


@pytest.fixture
def all_red_2() -> SignColoring:
    return SignColoring.all_red(2)
