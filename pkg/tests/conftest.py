from __future__ import annotations

import pytest

from gradpos import verify


@pytest.fixture(scope="session")
def run_group():
    """Run a verification group once per session and cache the outcomes."""
    cache = {}

    def _run(name):
        if name not in cache:
            cache[name] = verify.GROUPS[name](verify.MAX_RANK)
        return cache[name]

    return _run
