"""
Tests for settings
"""

import pytest
from pydantic import ValidationError

from drinpoly.config import Settings, get_settings, reset_settings


def test_defaults():
    settings = get_settings()

    assert settings.linalg_strategy == "division_free"
    assert settings.workers == 1
    assert settings.seed == 0
    assert settings.oracle_budget == 100_000
    assert settings.check_bounds is False
    assert settings.audit_dir is None
    assert settings.bench_reps == 3


def test_settings_are_cached():
    assert get_settings() is get_settings()


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("DRINPOLY_LINALG_STRATEGY", "interpolation")
    monkeypatch.setenv("DRINPOLY_WORKERS", "4")
    monkeypatch.setenv("DRINPOLY_CHECK_BOUNDS", "true")
    reset_settings()

    settings = get_settings()
    assert settings.linalg_strategy == "interpolation"
    assert settings.workers == 4
    assert settings.check_bounds is True


def test_invalid_values(monkeypatch):
    monkeypatch.setenv("DRINPOLY_LINALG_STRATEGY", "gauss")

    with pytest.raises(ValidationError):
        Settings()

    with pytest.raises(ValidationError):
        Settings(workers=0)
