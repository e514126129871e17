"""Shared fixtures for the test suites."""

import os

import pytest
from hypothesis import HealthCheck, settings

from src.config.settings import reset_config

# fresh_config only drops the settings singleton, so sharing it across examples is safe
settings.register_profile(
    "harmonica",
    suppress_health_check=[HealthCheck.function_scoped_fixture],
)
settings.register_profile("harmonica-quick", parent=settings.get_profile("harmonica"), max_examples=25)
settings.load_profile(os.getenv("HARMONICA_HYPOTHESIS_PROFILE", "harmonica"))


@pytest.fixture(autouse=True)
def fresh_config():
    """Rebuild the settings singleton around every test."""
    reset_config()
    yield
    reset_config()
