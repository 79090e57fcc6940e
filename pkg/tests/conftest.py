"""Shared fixtures: cached complexes and matchings, reused across modules."""

import pytest

from prewdvv import build_direct, build_matching


@pytest.fixture(scope="session")
def delta():
    """Factory returning the complex for a given ambient size, cached."""
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = build_direct(n)
        return cache[n]

    return get


@pytest.fixture(scope="session")
def matching():
    """Factory returning the Morse matching for a given size, cached."""
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = build_matching(n)
        return cache[n]

    return get
