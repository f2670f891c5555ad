"""
Fourier Multipliers - Infrastructure Layer

Applies the mode operators P^(m)_γ on a periodic grid by real FFT: forward
transform, pointwise multiplication by Θ^(m)_γ(ξ_k), inverse transform.
Also provides the spectral derivative and sub-grid translation used when
recentering solutions.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import fft

from src.domain.value_objects import Grid, Parameters, RadialField
from src.infrastructure.spectral.symbol import symbol_values

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class FourierMultiplier:
    """A real, even Fourier multiplier sampled on the rfft frequencies of a grid."""

    grid: Grid
    symbol: np.ndarray

    def __call__(self, values: np.ndarray) -> np.ndarray:
        return fft.irfft(fft.rfft(values) * self.symbol, n=self.grid.points)

    def shifted(self, shift: float) -> "FourierMultiplier":
        return FourierMultiplier(self.grid, _frozen(self.symbol + shift))

    def inverse(self) -> "FourierMultiplier":
        if np.any(self.symbol == 0.0):
            raise ZeroDivisionError("multiplier vanishes at some frequency")
        return FourierMultiplier(self.grid, _frozen(1.0 / self.symbol))

    @property
    def lowest(self) -> float:
        return float(self.symbol.min())

    @property
    def highest(self) -> float:
        return float(self.symbol.max())


def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.array(array, dtype=float)
    array.setflags(write=False)
    return array


@lru_cache(maxsize=128)
def mode_multiplier(grid: Grid, n: int, gamma: float, m: int = 0) -> FourierMultiplier:
    """Cached Θ^(m)_γ on the grid frequencies; γ may be 1 (local limit)."""
    symbol = symbol_values(n, gamma, m, grid.real_frequencies)
    logger.debug(f"Built Theta^({m}) multiplier for n={n}, gamma={gamma} on N={grid.points}, T={grid.half_length}")
    return FourierMultiplier(grid, _frozen(symbol))


def apply_periodic(values: np.ndarray, grid: Grid, n: int, gamma: float, m: int = 0) -> np.ndarray:
    """P^(m) applied to raw periodic samples, without the boundary-smallness guard."""
    return mode_multiplier(grid, n, gamma, m)(values)


def apply_Pm(field: RadialField, m: int, params: Parameters, periodic: bool = False) -> RadialField:
    """
    Apply the mode-m conformal fractional Laplacian to a sampled radial field.

    Args:
        field: Samples on a Grid; must be small at the grid ends
        m: Spherical-harmonic mode
        params: Parameter point supplying n and γ
        periodic: Skip the boundary-smallness guard for genuinely periodic inputs

    Returns:
        P^(m)field as a new RadialField on the same grid

    Raises:
        BoundaryLeak: If the field is not small at ±T and periodic is False
    """
    if not periodic:
        field.require_small_boundary()
    return field.with_values(apply_periodic(field.values, field.grid, params.n, params.gamma, m))


def spectral_derivative(values: np.ndarray, grid: Grid) -> np.ndarray:
    """d/dt by Fourier differentiation; the Nyquist coefficient is dropped."""
    coefficients = fft.rfft(values) * (1j * grid.real_frequencies)
    coefficients[-1] = 0.0
    return fft.irfft(coefficients, n=grid.points)


def translate(values: np.ndarray, grid: Grid, shift: float) -> np.ndarray:
    """
    Band-limited translation v(t) ↦ v(t − shift).

    The Nyquist mode is real, so it is rotated by cos(ξ_{N/2}·shift) instead of a complex phase.
    """
    xi = grid.real_frequencies
    spectrum = fft.rfft(values)
    coefficients = spectrum * np.exp(-1j * xi * shift)
    coefficients[-1] = spectrum[-1].real * np.cos(xi[-1] * shift)
    return fft.irfft(coefficients, n=grid.points)
