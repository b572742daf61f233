"""Shared fixtures."""

import pytest
from hypothesis import settings as hypothesis_settings

from dlcoh.core.config import get_settings
from dlcoh.monoid.words import Word

hypothesis_settings.register_profile("dlcoh", max_examples=60, deadline=None)
hypothesis_settings.load_profile("dlcoh")


@pytest.fixture(autouse=True)
def fresh_settings():
    """CLI flags mutate the cached settings; start every test from defaults."""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def word():
    def make(letters, n):
        return Word(tuple(letters), n)

    return make
