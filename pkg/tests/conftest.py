# -*- coding: utf-8 -*-
"""
Pytest configuration and fixtures for the homomesy engine tests.
"""
import os
import sys
from pathlib import Path

import pytest

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

os.environ.setdefault('MINUSCULE_ENV', 'testing')

from minuscule.catalog import CatalogEntry, build_entry  # noqa: E402
from minuscule.rootsys import root_system  # noqa: E402


@pytest.fixture(scope='session')
def a1():
    """A1 omega_1: one-element heap, two weights."""
    return build_entry(CatalogEntry('A', 1, 1))


@pytest.fixture(scope='session')
def a3_w2():
    """A3 omega_2: heap [2]x[2], six weights."""
    return build_entry(CatalogEntry('A', 3, 2))


@pytest.fixture(scope='session')
def a4_w2():
    return build_entry(CatalogEntry('A', 4, 2))


@pytest.fixture(scope='session')
def b2():
    """B2 omega_2: the spin representation, a three-element chain."""
    return build_entry(CatalogEntry('B', 2, 2))


@pytest.fixture(scope='session')
def c3():
    return build_entry(CatalogEntry('C', 3, 1))


@pytest.fixture(scope='session')
def d4_w1():
    return build_entry(CatalogEntry('D', 4, 1))


@pytest.fixture(scope='session')
def e6_w1():
    return build_entry(CatalogEntry('E', 6, 1))


@pytest.fixture(scope='session')
def e7_w7():
    return build_entry(CatalogEntry('E', 7, 7))


@pytest.fixture(scope='session')
def rs_a3():
    return root_system('A', 3)


@pytest.fixture(scope='session')
def rs_b3():
    return root_system('B', 3)


@pytest.fixture(scope='session')
def rs_c3():
    return root_system('C', 3)


@pytest.fixture(scope='session')
def rs_e8():
    return root_system('E', 8)
