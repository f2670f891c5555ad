"""
Unit tests for the indicial roots and tail decay fits.
"""

import numpy as np
import pytest

from src.domain.errors import NonPositiveField, UndecayedTail
from src.domain.value_objects import RadialField
from src.infrastructure.constants import C_alpha
from src.infrastructure.spectral import bubble_profile, decay_rate_fit, indicial_roots


@pytest.mark.parametrize("n, gamma", [(3, 0.5), (4, 0.25), (2, 0.75)])
def should_place_first_root_at_bubble_decay_without_weight(n, gamma, make_params):
    # Arrange
    params = make_params(n=n, gamma=gamma, alpha=0.0)

    # Act
    roots = indicial_roots(params, 1)

    # Assert
    assert roots[0].sigma == pytest.approx((n - 2.0 * gamma) / 2.0, abs=1e-8)
    assert roots[0].tau == pytest.approx(0.0, abs=1e-12)


def should_push_first_root_beyond_bubble_decay_for_negative_alpha(make_params):
    # Arrange
    params = make_params(alpha=-0.9)
    c_alpha = C_alpha(params)

    # Act
    sigma = indicial_roots(params, 1)[0].sigma

    # Assert
    assert 1.0 < sigma < 2.0
    assert abs(sigma / np.tan(np.pi * sigma / 2.0) + c_alpha) <= 1e-9


def should_pull_first_root_below_bubble_decay_for_positive_alpha(make_params):
    # Arrange
    params = make_params(alpha=0.3)
    c_alpha = C_alpha(params)

    # Act
    sigma = indicial_roots(params, 1)[0].sigma

    # Assert
    assert 0.0 < sigma < 1.0
    assert abs(sigma / np.tan(np.pi * sigma / 2.0) + c_alpha) <= 1e-9


@pytest.mark.parametrize("c_alpha", [2.0, -0.4])
def should_return_increasing_roots_with_small_residuals(c_alpha, make_params):
    # Arrange
    params = make_params()

    # Act
    roots = indicial_roots(params, 5, c_alpha=c_alpha)

    # Assert
    sigmas = np.array([root.sigma for root in roots])
    assert [root.index for root in roots] == list(range(5))
    assert np.all(np.diff(sigmas) > 0.0)
    assert all(root.residual <= 1e-10 for root in roots)
    np.testing.assert_allclose(sigmas / np.tan(np.pi * sigmas / 2.0), -c_alpha, atol=1e-9)


def should_recover_exact_exponential_decay(default_grid):
    # Arrange
    field = RadialField(default_grid, 3.0 * np.exp(-1.2 * default_grid.nodes))

    # Act
    fit = decay_rate_fit(field, (5.0, 15.0))

    # Assert
    assert fit.rate == pytest.approx(1.2, abs=1e-10)
    assert fit.amplitude == pytest.approx(3.0, rel=1e-10)
    assert fit.r2 == pytest.approx(1.0, abs=1e-10)


@pytest.mark.parametrize("gamma", [0.3, 0.5])
def should_recover_bubble_decay_rate(gamma, default_grid):
    # Arrange
    field = bubble_profile(default_grid, 3, gamma)

    # Act
    fit = decay_rate_fit(field, (8.0, 14.0))

    # Assert
    assert fit.rate == pytest.approx((3.0 - 2.0 * gamma) / 2.0, rel=1e-2)


def should_refuse_non_positive_tails(default_grid):
    # Arrange
    field = RadialField(default_grid, -np.exp(-np.abs(default_grid.nodes)))

    # Act & Assert
    with pytest.raises(NonPositiveField):
        decay_rate_fit(field, (5.0, 15.0))


@pytest.mark.parametrize("rate", [0.0, 1e-3, -0.2])
def should_refuse_tails_that_do_not_decay(rate, default_grid):
    # Arrange
    field = RadialField(default_grid, 2.0 * np.exp(-rate * default_grid.nodes))

    # Act & Assert
    with pytest.raises(UndecayedTail, match="no exponential decay"):
        decay_rate_fit(field, (5.0, 15.0))


def should_refuse_a_tail_sitting_on_roundoff_noise(default_grid):
    # Arrange
    noise = 1e-15 * (1.5 + np.sin(7.0 * default_grid.nodes))
    field = RadialField(default_grid, noise)

    # Act & Assert
    with pytest.raises(UndecayedTail):
        decay_rate_fit(field, (5.0, 15.0))


def should_refuse_windows_outside_the_half_line(default_grid):
    # Arrange
    field = bubble_profile(default_grid, 3, 0.5)

    # Act & Assert
    with pytest.raises(ValueError):
        decay_rate_fit(field, (-1.0, 5.0))
    with pytest.raises(ValueError):
        decay_rate_fit(field, (5.0, 20.0))
