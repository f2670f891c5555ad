"""
Fixtures for the constants tests.
"""

import mpmath
import pytest


def homogeneous_multiplier(n: int, gamma: float, s: float) -> float:
    """
    (−Δ)^γ |x|^{−s} = λ(s) |x|^{−s−2γ}, with
    λ(s) = 2^{2γ}Γ((s+2γ)/2)Γ((n−s)/2)/(Γ(s/2)Γ((n−s−2γ)/2)).
    """
    value = (
        mpmath.mpf(2) ** (2 * gamma)
        * mpmath.gamma((s + 2 * gamma) / 2)
        * mpmath.gamma((n - s) / 2)
        / (mpmath.gamma(s / 2) * mpmath.gamma((n - s - 2 * gamma) / 2))
    )
    return float(value)


@pytest.fixture
def power_multiplier():
    """Closed-form multiplier of the fractional Laplacian on pure powers."""
    return homogeneous_multiplier
