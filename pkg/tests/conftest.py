"""
Shared fixtures: nilpotent contexts, a seeded generator and the service client.
"""
import numpy as np
import pytest

from algebra.collector import nilpotent_context
from app import create_app


@pytest.fixture
def heisenberg():
    """Free nilpotent group of class 2 on two generators, basis (x1, x2, [x2,x1])"""
    return nilpotent_context(2, 2)


@pytest.fixture
def ctx23():
    return nilpotent_context(2, 3)


@pytest.fixture
def rng():
    return np.random.default_rng(0)


@pytest.fixture
def client():
    app = create_app('testing')
    return app.test_client()
