"""
Pytest configuration and shared fixtures.

This module contains fixtures used across multiple test modules. Ground
states are expensive, so the solved fields shared by the solver and
stability tests are session-scoped.
"""

from pathlib import Path
from tempfile import TemporaryDirectory

import pytest

from src.domain.value_objects import Grid, Parameters


@pytest.fixture
def temp_dir():
    """Create a temporary directory for test files."""
    with TemporaryDirectory() as tmpdir:
        yield Path(tmpdir)


@pytest.fixture
def make_params():
    """Factory fixture building Parameters with n=3, gamma=1/2 defaults; beta defaults to alpha."""

    def _make(n: int = 3, gamma: float = 0.5, alpha: float = 0.0, beta: float | None = None) -> Parameters:
        return Parameters(n=n, gamma=gamma, alpha=alpha, beta=alpha if beta is None else beta)

    return _make


@pytest.fixture(scope="session")
def default_grid():
    """The T=20, N=2048 production grid."""
    return Grid(half_length=20.0, points=2048)


@pytest.fixture(scope="session")
def small_grid():
    """A coarser grid for tests that only need qualitative answers."""
    return Grid(half_length=20.0, points=512)


@pytest.fixture(scope="session")
def symmetric_state(default_grid):
    """Ground state at n=3, gamma=1/2, alpha=0.3, beta=0.5, inside the radial-symmetry range."""
    from src.infrastructure.solver import solve_ground_state

    params = Parameters(n=3, gamma=0.5, alpha=0.3, beta=0.5)
    return params, solve_ground_state(params, default_grid)


@pytest.fixture(scope="session")
def broken_state(default_grid):
    """Ground state at n=3, gamma=1/2, alpha=-0.9, beta=-0.89, near the diagonal with alpha < 0."""
    from src.infrastructure.solver import solve_ground_state

    params = Parameters(n=3, gamma=0.5, alpha=-0.9, beta=-0.89)
    return params, solve_ground_state(params, default_grid)


@pytest.fixture(scope="session")
def bubble_state(default_grid):
    """Ground state at alpha = beta = 0, a rescaled bubble."""
    from src.infrastructure.solver import solve_ground_state

    params = Parameters(n=3, gamma=0.5, alpha=0.0, beta=0.0)
    return params, solve_ground_state(params, default_grid)
