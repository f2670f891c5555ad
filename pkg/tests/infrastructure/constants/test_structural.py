"""
Unit tests for the closed-form structural constants.
"""

import math

import numpy as np
import pytest

from src.infrastructure.constants import (
    bubble_constant,
    bubble_energy,
    c_ng,
    exponent_p,
    kappa_gamma,
    sphere_area,
    structural_constants,
)


def should_return_two_on_the_hardy_endpoint(make_params):
    # Arrange
    params = make_params(alpha=-0.3, beta=0.2)

    # Act & Assert
    assert exponent_p(params) == 2.0


def should_return_critical_exponent_on_the_diagonal(make_params):
    # Arrange
    params = make_params(alpha=0.2, beta=0.2)

    # Act & Assert
    assert exponent_p(params) == pytest.approx(6.0 / 2.0, rel=1e-15)


def should_evaluate_exponent_formula(make_params):
    # Arrange
    params = make_params(alpha=0.0, beta=0.25)

    # Act & Assert
    assert exponent_p(params) == pytest.approx(2.4, rel=1e-15)


def should_evaluate_half_order_constants_in_closed_form():
    # Act
    sigma, c = structural_constants(3, 0.5)

    # Assert
    assert c == pytest.approx(2.0 / math.pi, rel=1e-13)
    assert sigma == pytest.approx(1.0 / math.pi**2, rel=1e-13)


def should_approach_one_as_order_vanishes():
    # Act & Assert
    assert c_ng(3, 1e-9) == pytest.approx(1.0, abs=1e-7)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def should_increase_symbol_endpoint_with_order(n):
    # Arrange
    gammas = np.linspace(0.05, 0.95, 19)

    # Act
    values = np.array([c_ng(n, g) for g in gammas])

    # Assert
    assert np.all(np.diff(values) > 0.0)
    assert np.all(values > 0.0)


def should_reject_orders_outside_unit_interval():
    # Act & Assert
    with pytest.raises(ValueError):
        structural_constants(3, 1.0)


@pytest.mark.parametrize("dim, area", [(1, 2.0), (2, 2.0 * math.pi), (3, 4.0 * math.pi), (4, 2.0 * math.pi**2)])
def should_return_unit_sphere_areas(dim, area):
    # Act & Assert
    assert sphere_area(dim) == pytest.approx(area, rel=1e-14)


def should_evaluate_bubble_constant_at_half_order():
    # Act & Assert
    assert bubble_constant(3, 0.5) == pytest.approx(2.0, rel=1e-14)


def should_evaluate_bubble_energy_at_half_order():
    # Arrange
    # p = 3, omega = 4*pi, integral of (2 cosh t)^-3 = pi/16, varsigma = 1/pi^2, c* = 2
    expected = (4.0 * math.pi) ** (1.0 / 3.0) * 2.0 * math.pi**2 * 2.0 * (math.pi / 16.0) ** (1.0 / 3.0)

    # Act & Assert
    assert bubble_energy(3, 0.5) == pytest.approx(expected, rel=1e-13)


def should_add_mass_term_to_symbol_endpoint():
    # Act & Assert
    assert kappa_gamma(1.0, 3, 0.5) == pytest.approx(1.0 + 2.0 / math.pi, rel=1e-14)
    assert kappa_gamma(1.0, 3, 1.0) == pytest.approx(1.25, rel=1e-13)
