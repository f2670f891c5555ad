"""
Unit tests for the cylinder energy functional.
"""

import pytest

from src.domain.errors import ZeroField
from src.domain.value_objects import RadialField
from src.infrastructure.constants import bubble_energy
from src.infrastructure.solver import energy_F
from src.infrastructure.spectral import bubble_profile, translate


@pytest.mark.parametrize("gamma", [0.3, 0.5, 0.7])
def should_give_the_closed_form_sobolev_value_on_the_bubble(gamma, make_params, default_grid):
    # Arrange
    params = make_params(gamma=gamma, alpha=0.0)
    bubble = bubble_profile(default_grid, 3, gamma)

    # Act
    value = energy_F(bubble, params)

    # Assert
    assert value == pytest.approx(bubble_energy(3, gamma), rel=1e-9)


def should_not_change_under_scaling(make_params, default_grid):
    # Arrange
    params = make_params(alpha=0.3, beta=0.5)
    field = bubble_profile(default_grid, 3, 0.5)

    # Act
    scaled = energy_F(field.with_values(3.0 * field.values), params)

    # Assert
    assert scaled == pytest.approx(energy_F(field, params), rel=1e-12)


def should_not_change_under_translation(make_params, default_grid):
    # Arrange
    params = make_params(alpha=-0.5, beta=-0.3)
    field = bubble_profile(default_grid, 3, 0.5)
    moved = field.with_values(translate(field.values, default_grid, 1.37))

    # Act
    value = energy_F(moved, params)

    # Assert
    assert value == pytest.approx(energy_F(field, params), rel=1e-10)


def should_refuse_the_zero_field(make_params, small_grid):
    # Arrange
    params = make_params()
    zero = RadialField(small_grid, [0.0] * small_grid.points)

    # Act / Assert
    with pytest.raises(ZeroField):
        energy_F(zero, params)
