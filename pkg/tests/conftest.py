import pytest
from fastapi.testclient import TestClient
from hypothesis import settings

from app.components.base.config import get_settings
from app.components.base.logging import configure_logging
from app.components.probe.comparator import ComparisonProbe
from app.components.probe.models import Key, RedRange, keys_from_ranks
from app.components.probe.rng import shuffle

settings.register_profile("lab", deadline=None, max_examples=60)
settings.load_profile("lab")


@pytest.fixture(autouse=True, scope="session")
def _logging():
    configure_logging("development")


@pytest.fixture
def lab_settings():
    return get_settings()


@pytest.fixture
def uncolored() -> ComparisonProbe:
    return ComparisonProbe.uncolored()


@pytest.fixture
def top_probe():
    """Probe coloring the r largest of n ranks."""

    def make(n: int, r: int) -> ComparisonProbe:
        return ComparisonProbe(RedRange.top(n, r))

    return make


@pytest.fixture
def shuffled():
    def make(n: int, seed: int = 7) -> list[Key]:
        return shuffle(keys_from_ranks(range(n)), seed)

    return make


@pytest.fixture
def client():
    from app.main import app

    with TestClient(app) as test_client:
        yield test_client
