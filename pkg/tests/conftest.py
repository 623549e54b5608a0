from __future__ import annotations

import json
import os
import sys

import pytest
from hypothesis import settings

HERE = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, HERE)

settings.register_profile("default", deadline=None, max_examples=40, derandomize=True)
settings.load_profile("default")


@pytest.fixture(scope="session")
def oracles():
    """Frozen mpmath values; regenerate with tests/data/make_oracles.py."""
    with open(os.path.join(HERE, "data", "oracles.json")) as fh:
        return json.load(fh)


@pytest.fixture(scope="session")
def transform_oracle(oracles):
    return {(r["name"], r["x"]): r["value"] for r in oracles["transforms"]}
