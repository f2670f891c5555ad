"""
Fixtures for the stability tests.
"""

import pytest

from src.domain.value_objects import Parameters
from src.infrastructure.solver import solve_ground_state


@pytest.fixture(scope="session")
def mild_state(default_grid):
    """Ground state at n=3, gamma=1/2, alpha=0.1, beta=0.3."""
    params = Parameters(n=3, gamma=0.5, alpha=0.1, beta=0.3)
    return params, solve_ground_state(params, default_grid)


@pytest.fixture(params=["symmetric_state", "mild_state", "bubble_state"])
def radial_state(request):
    """The three symmetric-range ground states."""
    return request.getfixturevalue(request.param)
