"""
Shared fixtures: the running examples

A1      F_2[x]/(x^3), M = <x> inside one copy of A
A2      two vertices u, v with a: u -> v, b: v -> u and ab = ba = 0, M = <a>
A1^2    two copies of A1, M = <m1*x + m2*x, m2*x>
trunc   relation x^2 + x^3 with nilpotency bound 4, M = the whole module
"""

import pathlib
import sys

import pytest

# Add the repository root so the src package imports
sys.path.insert(0, str(pathlib.Path(__file__).parent.parent))

from src.instances import a1_problem, a1_squared_problem, a2_problem, truncated_problem  # noqa: E402


@pytest.fixture
def a1():
    return a1_problem()


@pytest.fixture
def a2():
    return a2_problem()


@pytest.fixture
def a1_squared():
    return a1_squared_problem()


@pytest.fixture
def truncated():
    return truncated_problem()
