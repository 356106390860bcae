import quivermoduli
import pytest


@pytest.fixture(autouse=True)
def _fresh_caches():
    # per-test isolation for the memoized recursions
    quivermoduli.clear_caches()
    yield
