"""
Profiles - Infrastructure Layer

Closed-form and initial profiles on the grid (sech-power presets, the local
soliton, plateau cutoffs) and the small field manipulations shared by the
solvers: reflection symmetrization, mass centroids, peak recentering and the
sign check on converged fields.
"""

import logging

import numpy as np
from scipy import fft

from src.domain.errors import PositivityLoss
from src.domain.value_objects import Grid
from src.infrastructure.spectral import translate

logger = logging.getLogger(__name__)

# dips below this fraction of the peak are never truncation ringing
RINGING_FRACTION = 1e-5
TAIL_FACTOR = 10.0
PEAK_ITERATIONS = 20
PEAK_TOLERANCE = 1e-12


def symmetrize(values: np.ndarray, grid: Grid) -> np.ndarray:
    """Even part of the samples about t = 0."""
    return 0.5 * (values + values[grid.reflection])


def mass_centroid(values: np.ndarray, grid: Grid) -> float:
    """
    ∫ t v dt / ∫ v dt; zero for fields with no net mass.

    The node t = −T is its own mirror image on the periodic grid, so it carries
    no moment and even fields have centroid exactly 0.
    """
    total = float(np.sum(values))
    if total == 0.0:
        return 0.0
    return float(np.dot(grid.nodes[1:], values[1:]) / total)


def peak_location(values: np.ndarray, grid: Grid) -> float:
    """Maximum of the trigonometric interpolant, refined by Newton from the largest sample."""
    xi = grid.real_frequencies[1:-1]
    coefficients = fft.rfft(values)[1:-1]
    origin = grid.nodes[0]
    t = float(grid.nodes[np.argmax(values)])
    for _ in range(PEAK_ITERATIONS):
        phase = coefficients * np.exp(1j * xi * (t - origin))
        slope = -2.0 * float(np.sum(xi * phase.imag)) / grid.points
        curvature = -2.0 * float(np.sum(xi**2 * phase.real)) / grid.points
        if curvature >= 0.0:
            break
        step = float(np.clip(slope / curvature, -grid.spacing, grid.spacing))
        t -= step
        if abs(step) <= PEAK_TOLERANCE * grid.spacing:
            break
    return t


def center_on_peak(values: np.ndarray, grid: Grid) -> tuple[np.ndarray, float]:
    """Translate the samples so the interpolant peaks at t = 0; returns (values, peak position)."""
    location = peak_location(values, grid)
    return translate(values, grid, -location), location

def sech_power(t: np.ndarray, rate: float, exponent: float) -> np.ndarray:
    """sech(rate·t)^exponent without overflow."""
    magnitude = np.abs(rate * t)
    return np.exp(exponent * (np.log(2.0) - magnitude - np.log1p(np.exp(-2.0 * magnitude))))


def preset_profile(grid: Grid, p: float, sigma0: float) -> np.ndarray:
    """sech^{2/(p−2)}(σ₀(p−2)t/2): tails decay like e^{−σ₀|t|}."""
    return sech_power(grid.nodes, sigma0 * (p - 2.0) / 2.0, 2.0 / (p - 2.0))


def soliton_profile(grid: Grid, n: int, c0: float, p0: float) -> np.ndarray:
    """
    Solution of −v'' + a v = v^{p0−1}, a = (n−2)²/4 + c0, decaying on both sides.

    v*(t) = (p0·a/2)^{1/(p0−2)} sech^{2/(p0−2)}((p0−2)√a·t/2).
    """
    a = (n - 2.0) ** 2 / 4.0 + c0
    if a <= 0.0:
        raise ValueError(f"soliton needs (n-2)^2/4 + c0 > 0, got {a}")
    amplitude = (p0 * a / 2.0) ** (1.0 / (p0 - 2.0))
    return amplitude * sech_power(grid.nodes, (p0 - 2.0) * np.sqrt(a) / 2.0, 2.0 / (p0 - 2.0))


def _smooth_step(x: np.ndarray) -> np.ndarray:
    out = np.zeros_like(x)
    positive = x > 0.0
    out[positive] = np.exp(-1.0 / x[positive])
    return out


def cutoff_profile(grid: Grid, radius: float, width: float = 1.0) -> np.ndarray:
    """C^∞ plateau: 1 on |t| ≤ radius, 0 on |t| ≥ radius + width."""
    distance = np.abs(grid.nodes)
    inside = _smooth_step((radius + width - distance) / width)
    outside = _smooth_step((distance - radius) / width)
    return inside / (inside + outside)


def truncation_level(values: np.ndarray) -> float:
    """Weight of the upper quarter of the spectrum, the pointwise accuracy of the interpolant."""
    coefficients = np.abs(fft.rfft(values)) / len(values)
    return float(2.0 * np.sum(coefficients[3 * len(coefficients) // 4 :]))


def sign_margin(values: np.ndarray) -> float:
    """How far below zero a converged positive field may dip through discretization ringing."""
    return max(RINGING_FRACTION * float(np.max(values)), TAIL_FACTOR * truncation_level(values))


def require_positive(values: np.ndarray, label: str) -> float:
    """
    Reject fields that change sign beyond the ringing margin.

    Args:
        values: Converged samples with a positive peak
        label: Where the field came from, for the error message

    Returns:
        The minimum of the samples

    Raises:
        PositivityLoss: If the minimum lies below −sign_margin(values)
    """
    minimum = float(np.min(values))
    margin = sign_margin(values)
    if minimum < -margin:
        raise PositivityLoss(
            f"{label} changed sign (min {minimum:.3e}, max {float(np.max(values)):.3e})",
            minimum=minimum,
            margin=margin,
        )
    if minimum < 0.0:
        logger.debug(f"{label} dips to {minimum:.3e} within the ringing margin {margin:.3e}")
    return minimum
