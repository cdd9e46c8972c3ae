#!/usr/bin/env python3
"""
Tests for runtime settings.
"""

import sys
import os
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

import pytest
from pydantic import ValidationError

from app.config import Settings


def test_defaults():
    settings = Settings.from_env({})
    assert settings.workers == 1
    assert settings.search_limit == 2_000_000
    assert settings.witness_cap == 50
    assert settings.table_limit == 4096


def test_environment_overrides():
    print("Testing KUMMER_HW_* variables...")

    settings = Settings.from_env({"KUMMER_HW_WORKERS": "4", "KUMMER_HW_SEED": "7", "OTHER": "1"})
    assert settings.workers == 4
    assert settings.seed == 7
    with pytest.raises(ValidationError):
        Settings.from_env({"KUMMER_HW_SEARCH_LIMIT": "0"})
    with pytest.raises(ValidationError):
        Settings.from_env({"KUMMER_HW_WORKERS": "many"})

    print("✓ environment parsed and validated")


def test_worker_count():
    settings = Settings(workers=3)
    assert settings.worker_count() == 3
    assert settings.worker_count(1) == 1
    assert settings.worker_count(0) >= 1
    assert Settings(workers=0).worker_count() >= 1
