"""
Hardy Endpoint - Infrastructure Layer

At β = α+γ the exponent is p = 2, the equation is linear and no extremal
exists; the best constant is the infimum 2κ, approached by wide plateaus.
"""

import logging
from typing import Iterable, List, Optional, Sequence

import numpy as np
from scipy import fft

from src.domain.entities import HardySample
from src.domain.value_objects import Grid, Parameters, ProblemConstants
from src.infrastructure.constants import problem_constants
from src.infrastructure.solver.profiles import cutoff_profile
from src.infrastructure.spectral import mode_multiplier

logger = logging.getLogger(__name__)

TRANSITION_WIDTH = 1.0


def _quadratic_ratio(values: np.ndarray, grid: Grid, n: int, gamma: float) -> float:
    """⟨v, P^(0)v⟩/⟨v, v⟩ by Parseval on the rfft coefficients."""
    coefficients = np.abs(fft.rfft(values)) ** 2
    weights = np.full(coefficients.shape, 2.0)
    weights[0] = 1.0
    weights[-1] = 1.0
    symbol = mode_multiplier(grid, n, gamma, 0).symbol
    return float(np.sum(weights * symbol * coefficients) / np.sum(weights * coefficients))


def hardy_limit_check(
    params: Parameters,
    grid: Grid,
    R_list: Iterable[float],
    constants: Optional[ProblemConstants] = None,
) -> List[HardySample]:
    """
    F_{α,α+γ} on smooth plateau cutoffs of half-width R and transition width 1.

    With p = 2 the sphere factor drops out and F = 2ς⁻¹(⟨v,P^(0)v⟩/⟨v,v⟩ + C(α)),
    which is at least 2κ because Θ^(0) ≥ c_{n,γ}.

    Args:
        params: Parameter point on the Hardy endpoint β = α+γ
        grid: Grid wide enough to hold every plateau with room to spare
        R_list: Plateau half-widths
        constants: Precomputed constants for params

    Returns:
        One HardySample per radius, in the order given

    Raises:
        ValueError: If p ≠ 2 or a plateau does not fit inside (−T, T)
    """
    if not params.is_hardy_endpoint:
        raise ValueError(f"hardy_limit_check needs beta = alpha+gamma, got p = {params.p}")
    constants = constants or problem_constants(params)
    samples = []
    for radius in R_list:
        if radius <= 0.0 or radius + 2.0 * TRANSITION_WIDTH > grid.half_length:
            raise ValueError(f"plateau radius {radius} does not fit on a grid with T = {grid.half_length}")
        values = cutoff_profile(grid, radius, TRANSITION_WIDTH)
        ratio = _quadratic_ratio(values, grid, params.n, params.gamma)
        value = 2.0 / constants.sigma_ng * (ratio + constants.C_alpha)
        logger.debug(f"Hardy cutoff R={radius}: F={value:.15g}")
        samples.append(HardySample(radius=float(radius), value=value))
    return samples


def richardson_limit(samples: Sequence[HardySample]) -> float:
    """
    Extrapolate F(R) = F∞ + a/R from the two widest plateaus.

    A single sample is returned as is.
    """
    if not samples:
        raise ValueError("no samples to extrapolate")
    ordered = sorted(samples, key=lambda sample: sample.radius)
    if len(ordered) == 1:
        return ordered[0].value
    first, last = ordered[-2], ordered[-1]
    return (last.radius * last.value - first.radius * first.value) / (last.radius - first.radius)
