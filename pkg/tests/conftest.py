"""
Shared fixtures: small posets that recur across the suites, and a clean logging context.
"""

import logging

import pytest

from kuratowski_lab.catalogs import set_data_dir
from kuratowski_lab.context import clear_context
from kuratowski_lab.posets import antichain, chain, from_covers


@pytest.fixture(autouse=True)
def clean_state():
    clear_context()
    yield
    clear_context()
    set_data_dir(None)
    logging.getLogger('kuratowski_lab').handlers.clear()


@pytest.fixture
def chain2():
    return chain(2)


@pytest.fixture
def chain3():
    return chain(3)


@pytest.fixture
def antichain2():
    return antichain(2)


@pytest.fixture
def vee():
    """One bottom (0) below two tops (1, 2)."""
    return from_covers(3, [(0, 1), (0, 2)])


@pytest.fixture
def boolean4():
    """Bottom 0, atoms 1 and 2, top 3."""
    return from_covers(4, [(0, 1), (0, 2), (1, 3), (2, 3)])


@pytest.fixture
def m3():
    """Bottom 0, three atoms, top 4: the smallest modular non-distributive lattice."""
    return from_covers(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
