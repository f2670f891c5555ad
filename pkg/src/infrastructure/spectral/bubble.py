"""
Bubble Profile - Infrastructure Layer

The unweighted extremal in cylinder variables, b(t) = (2cosh t)^{−(n−2γ)/2},
and its rescaling onto the solver normalization.
"""

import numpy as np

from src.domain.value_objects import Grid, RadialField
from src.infrastructure.constants import bubble_constant, c_ng


def bubble_values(t: np.ndarray, n: int, gamma: float) -> np.ndarray:
    """(2cosh t)^{−(n−2γ)/2}, evaluated as e^{−(n−2γ)/2·(|t| + log(1+e^{−2|t|}))}."""
    magnitude = np.abs(t)
    return np.exp(-(n - 2.0 * gamma) / 2.0 * (magnitude + np.log1p(np.exp(-2.0 * magnitude))))


def bubble_profile(grid: Grid, n: int, gamma: float, center: float = 0.0) -> RadialField:
    """Bubble sampled on the grid, centered at `center`."""
    return RadialField(grid, bubble_values(grid.nodes - center, n, gamma))


def bubble_scale(n: int, gamma: float) -> float:
    """Amplitude (c*/c_{n,γ})^{1/(p−2)} that turns the bubble into a solution of P^(0)v = c_{n,γ}v^{p−1}."""
    p = 2.0 * n / (n - 2.0 * gamma)
    return (bubble_constant(n, gamma) / c_ng(n, gamma)) ** (1.0 / (p - 2.0))
