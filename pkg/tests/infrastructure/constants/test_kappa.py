"""
Unit tests for the weighted constant κ and the quantities built on it.
"""

import math

import mpmath
import numpy as np
import pytest
from scipy.integrate import dblquad

from src.domain.errors import DivergentIntegral
from src.infrastructure.constants import (
    C_alpha,
    h_alpha,
    kappa,
    kappa_estimate,
    kappa_general,
    problem_constants,
    sigma_ng,
    sphere_average,
    structural_constants,
)


def should_vanish_for_zero_homogeneity():
    # Act & Assert
    assert kappa_general(3, 0.5, 0.2, 0.0) == 0.0


@pytest.mark.parametrize("n, gamma, alpha_bar", [(3, 0.5, 0.6), (4, 0.25, 1.0), (2, 0.75, -0.4)])
def should_vanish_on_the_balanced_weight(n, gamma, alpha_bar):
    # Arrange
    alpha = (n - 2.0 * gamma) / 2.0 - alpha_bar / 2.0

    # Act
    value = kappa_general(n, gamma, alpha, alpha_bar)

    # Assert
    assert abs(value) <= 1e-12


@pytest.mark.parametrize("n", [2, 3, 4, 5])
@pytest.mark.parametrize("gamma", [0.25, 0.5, 0.75])
def should_reproduce_symbol_endpoint_without_weight(n, gamma, make_params):
    # Arrange
    params = make_params(n=n, gamma=gamma, alpha=0.0)
    sigma, c = structural_constants(n, gamma)

    # Act
    value = sigma * kappa(params)

    # Assert
    assert value == pytest.approx(c, rel=1e-6)


@pytest.mark.parametrize("n, gamma, s", [(3, 0.5, 0.3), (3, 0.5, 1.4), (4, 0.25, 2.1), (2, 0.75, 0.2)])
def should_match_homogeneous_power_multiplier(n, gamma, s, power_multiplier):
    # Act
    value = sigma_ng(n, gamma) * kappa_general(n, gamma, 0.0, s)

    # Assert
    assert value == pytest.approx(power_multiplier(n, gamma, s), rel=1e-6)


@pytest.mark.slow
def should_confirm_power_multiplier_by_direct_double_integration(power_multiplier):
    # Arrange
    n, gamma, s = 3, 0.5, 0.6
    lam = (n + 2 * gamma) / 2

    def integrand(u, rho):
        # cosine = 1 - u**2 spreads the corner singularity at (rho, cosine) = (1, 1)
        cosine = 1.0 - u * u
        weight = (1.0 - rho ** (-s)) * (rho ** (n - 1) - rho ** (2 * gamma - 1 + s))
        return weight * (1.0 + rho * rho - 2.0 * rho * cosine) ** (-lam) * 2.0 * u

    pieces = [(1.0, 1.5), (1.5, 4.0), (4.0, 1e3), (1e3, np.inf)]
    total = 0.0
    for lower, upper in pieces:
        value, _ = dblquad(integrand, lower, upper, 0.0, math.sqrt(2.0), epsabs=1e-13, epsrel=1e-10)
        total += value

    # n = 3: the angular weight is flat and |S^1| = 2*pi
    direct = 2.0 * math.pi * total

    # Act
    value = sigma_ng(n, gamma) * direct

    # Assert
    assert value == pytest.approx(power_multiplier(n, gamma, s), rel=1e-5)


def should_agree_with_angular_rule_at_the_closed_form_switch():
    # Arrange
    n, gamma, rho = 3, 0.4, 1.5
    lam = (n + 2 * gamma) / 2
    expected = 2 * math.pi * float(mpmath.quad(lambda s: (1 + rho**2 - 2 * rho * s) ** (-lam), [-1, 1]))

    # Act
    below = sphere_average(n, gamma, rho * (1 - 1e-15))
    above = sphere_average(n, gamma, rho)

    # Assert
    assert below == pytest.approx(expected, rel=1e-10)
    assert above == pytest.approx(expected, rel=1e-10)


@pytest.mark.parametrize("alpha", [-0.9, -0.5, 0.3, 0.7])
def should_match_mass_term_closed_form(alpha, make_params, power_multiplier):
    # Arrange
    params = make_params(alpha=alpha)

    # Act
    value = C_alpha(params)

    # Assert
    assert value == pytest.approx(-power_multiplier(3, 0.5, alpha), rel=1e-6)


def should_vanish_mass_term_without_weight(make_params):
    # Act & Assert
    assert abs(C_alpha(make_params(alpha=0.0))) <= 1e-7


def should_decrease_kappa_and_mass_term_in_alpha(make_params):
    # Arrange
    alphas = np.linspace(-0.9, 0.9, 10)

    # Act
    kappas = [kappa(make_params(alpha=a)) for a in alphas]
    masses = [C_alpha(make_params(alpha=a)) for a in alphas]

    # Assert
    assert all(k > 0.0 for k in kappas)
    assert np.all(np.diff(kappas) < 0.0)
    assert np.all(np.diff(masses) < 0.0)


def should_keep_negative_mass_term_above_symbol_endpoint_for_negative_alpha(make_params):
    # Arrange
    c = structural_constants(3, 0.5)[1]

    # Act
    masses = [C_alpha(make_params(alpha=a)) for a in np.linspace(-0.95, -0.05, 7)]

    # Assert
    assert all(m > 0.0 for m in masses)
    assert all(-m < c for m in masses)


def should_vanish_weighted_constant_at_the_upper_weight_end(make_params):
    # Arrange
    params = make_params(alpha=0.999)
    sigma = structural_constants(3, 0.5)[0]

    # Act & Assert
    assert sigma * kappa(params) < 1e-2


@pytest.mark.parametrize(
    "alpha_bar, alpha, sign",
    [(0.6, 0.2, 1.0), (0.6, 0.9, -1.0), (-0.3, 0.5, -1.0), (-0.3, 1.5, 1.0), (1.2, -0.4, 1.0)],
)
def should_follow_sign_pattern_around_the_balanced_weight(alpha_bar, alpha, sign):
    # Act
    value = kappa_general(3, 0.5, alpha, alpha_bar)

    # Assert
    assert math.copysign(1.0, value) == sign


def should_report_error_estimates_consistent_with_refinement():
    # Arrange
    coarse = kappa_estimate(3, 0.3, -0.4, 1.6, 1e-8)

    # Act
    fine = kappa_estimate(3, 0.3, -0.4, 1.6, 5e-9)

    # Assert
    assert abs(coarse.value - fine.value) <= 5.0 * coarse.abs_error + 1e-14 * abs(fine.value)


@pytest.mark.parametrize("alpha, alpha_bar", [(-1.2, 0.5), (0.5, 2.6), (0.2, -1.5), (3.5, -1.0)])
def should_raise_divergent_integral_outside_finiteness_region(alpha, alpha_bar):
    # Act & Assert
    with pytest.raises(DivergentIntegral):
        kappa_general(3, 0.5, alpha, alpha_bar)


def should_bundle_constants_with_exact_mass_identity(make_params):
    # Arrange
    params = make_params(alpha=-0.4, beta=-0.2)

    # Act
    constants = problem_constants(params)

    # Assert
    assert constants.C_alpha == constants.sigma_ng * constants.kappa - constants.c_ng
    assert constants.kappa_gamma == pytest.approx(constants.normalization, rel=1e-15)
    assert constants.kappa_error >= 0.0


def should_approach_hardy_line_as_alpha_nears_lower_end(make_params):
    # Arrange
    params = make_params(alpha=-0.999)

    # Act
    bound = h_alpha(params, M=1.0)

    # Assert
    assert bound.inside
    assert bound.h == pytest.approx(params.alpha + params.gamma, abs=0.05)


def should_give_vacuous_bound_without_weight(make_params):
    # Arrange
    params = make_params(alpha=0.0)

    # Act
    bound = h_alpha(params, M=2.5)

    # Assert
    assert bound.h == pytest.approx(-1.0, abs=1e-6)
    assert not bound.inside
    assert bound.clamped == 0.0


def should_reject_non_positive_bound_constant(make_params):
    # Act & Assert
    with pytest.raises(ValueError):
        h_alpha(make_params(alpha=-0.5), M=0.0)
