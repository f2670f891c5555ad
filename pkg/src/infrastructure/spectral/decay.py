"""
Tail Decay Fit - Infrastructure Layer

Least-squares fit of log v(t) = log a − σt on a window of the positive
half-line, to compare solution tails with the first indicial root.
"""

from typing import Tuple

import numpy as np

from src.domain.errors import NonPositiveField, UndecayedTail
from src.domain.value_objects import DecayFit, Grid, RadialField

# least drop of log v across the window, and least r² of the straight-line fit
MIN_LOG_DROP = 0.5
MIN_R2 = 0.9


def decay_rate_fit(field: RadialField, window: Tuple[float, float]) -> DecayFit:
    """
    Fit v(t) ≈ a·e^{−σt} on the grid nodes inside `window`.

    Args:
        field: Sampled profile
        window: (t_start, t_end) with 0 < t_start < t_end < T − 2Δt

    Returns:
        DecayFit with the rate σ, the amplitude a and the coefficient of determination r²

    Raises:
        NonPositiveField: If the field is not strictly positive on the window
        UndecayedTail: If log v falls by less than MIN_LOG_DROP across the window
            or is not close to a straight line there
        ValueError: If the window is not inside (0, T − 2Δt) or holds fewer than three nodes
    """
    grid = field.grid
    start, end = window
    if not 0.0 < start < end < grid.half_length - 2.0 * grid.spacing:
        raise ValueError(f"fit window {window} must lie inside (0, {grid.half_length - 2.0 * grid.spacing})")
    t = grid.nodes
    mask = (t >= start) & (t <= end)
    if np.count_nonzero(mask) < 3:
        raise ValueError(f"fit window {window} holds fewer than three grid nodes")
    samples = field.values[mask]
    if np.any(samples <= 0.0):
        raise NonPositiveField(f"field is not strictly positive on {window}", minimum=float(samples.min()))

    times = t[mask]
    logs = np.log(samples)
    slope, intercept = np.polyfit(times, logs, 1)
    fitted = slope * times + intercept
    total = float(np.sum((logs - logs.mean()) ** 2))
    r2 = 1.0 if total == 0.0 else 1.0 - float(np.sum((logs - fitted) ** 2)) / total
    drop = float(-slope) * (times[-1] - times[0])
    if drop < MIN_LOG_DROP or r2 < MIN_R2:
        raise UndecayedTail(
            f"no exponential decay on {window}: log drop {drop:.3g}, r2 {r2:.3g}",
            rate=float(-slope),
            r2=r2,
        )
    return DecayFit(rate=float(-slope), amplitude=float(np.exp(intercept)), r2=r2)


def decay_window(grid: Grid) -> Tuple[float, float]:
    """Default fit window (0.4T, 0.7T): past the core, clear of the periodic wrap-around."""
    return 0.4 * grid.half_length, 0.7 * grid.half_length
