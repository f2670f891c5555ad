"""
Linearized Operator - Infrastructure Layer

L̄^(m)φ = P^(m)φ + 𝒱φ with 𝒱 = C(α) − (p−1)ςκ·v̄^{p−2}, the second variation
of the cylinder energy at a ground state v̄ projected onto spherical-harmonic
mode m. The action is matrix-free; a dense realization is assembled as a
circulant plus a diagonal for the eigensolvers.
"""

import logging
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Optional

import numpy as np
from scipy import fft
from scipy.linalg import circulant

from src.domain.entities import SolveResult
from src.domain.value_objects import Grid, Parameters, ProblemConstants, RadialField
from src.infrastructure.constants import problem_constants
from src.infrastructure.spectral import FourierMultiplier, mode_multiplier

logger = logging.getLogger(__name__)

DENSE_LIMIT = 4096


@dataclass(frozen=True, eq=False)
class LinearizedOperator:
    mode: int
    params: Parameters
    grid: Grid
    potential: np.ndarray
    base_field: RadialField
    multiplier: FourierMultiplier

    def __call__(self, values: np.ndarray) -> np.ndarray:
        return self.multiplier(values) + self.potential * values

    def rayleigh(self, values: np.ndarray) -> float:
        return float(np.dot(values, self(values)) / np.dot(values, values))

    @property
    def multiplicity(self) -> int:
        return harmonic_multiplicity(self.params.n, self.mode)

    @cached_property
    def matrix(self) -> np.ndarray:
        """Dense symmetric matrix of the action on the grid samples."""
        size = self.grid.points
        if size > DENSE_LIMIT:
            raise ValueError(f"dense assembly is limited to N <= {DENSE_LIMIT}, got {size}")
        column = fft.irfft(self.multiplier.symbol, n=size)
        dense = circulant(column)
        dense = 0.5 * (dense + dense.T)
        dense[np.diag_indices(size)] += self.potential
        dense.setflags(write=False)
        return dense


def harmonic_multiplicity(n: int, m: int) -> int:
    """Dimension of the degree-m spherical harmonics on S^{n−1}."""
    if m == 0:
        return 1
    return math.comb(m + n - 1, n - 1) - math.comb(m + n - 3, n - 1)


def linearized_potential(field: RadialField, params: Parameters, constants: ProblemConstants) -> np.ndarray:
    weight = (params.p - 1.0) * constants.normalization * np.abs(field.values) ** (params.p - 2.0)
    return constants.C_alpha - weight


def assemble_linearized(
    m: int,
    solve: SolveResult,
    params: Parameters,
    constants: Optional[ProblemConstants] = None,
) -> LinearizedOperator:
    """
    Build L̄^(m) around a converged ground state.

    Args:
        m: Spherical-harmonic mode (≥ 0)
        solve: Converged ground state v̄
        params: Parameter point the state was solved at
        constants: Precomputed constants for params

    Returns:
        LinearizedOperator with the potential 𝒱 sampled on the grid
    """
    if m < 0:
        raise ValueError(f"mode must be non-negative, got {m}")
    constants = constants or problem_constants(params)
    field = solve.field
    potential = linearized_potential(field, params, constants)
    potential.setflags(write=False)
    edge = max(abs(potential[0] - constants.C_alpha), abs(potential[-1] - constants.C_alpha))
    if edge > 1e-6:
        logger.warning(f"linearized potential differs from C(alpha) by {edge:.2e} at the grid ends")
    return LinearizedOperator(
        mode=m,
        params=params,
        grid=field.grid,
        potential=potential,
        base_field=field,
        multiplier=mode_multiplier(field.grid, params.n, params.gamma, m),
    )
