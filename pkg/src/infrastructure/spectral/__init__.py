"""Pseudospectral discretization of the mode operators on the cylinder line."""

from src.infrastructure.spectral.bubble import bubble_profile, bubble_scale, bubble_values
from src.infrastructure.spectral.decay import decay_rate_fit, decay_window
from src.infrastructure.spectral.kernel_oracle import apply_P0_kernel_oracle, mode_zero_kernel
from src.infrastructure.spectral.operators import (
    FourierMultiplier,
    apply_periodic,
    apply_Pm,
    mode_multiplier,
    spectral_derivative,
    translate,
)
from src.infrastructure.spectral.roots import indicial_roots
from src.infrastructure.spectral.symbol import (
    mode_ordering_violations,
    symbol_monotonicity,
    symbol_values,
    theta_complex,
    theta_imaginary,
    theta_symbol,
)

__all__ = [
    "FourierMultiplier",
    "apply_P0_kernel_oracle",
    "apply_Pm",
    "apply_periodic",
    "bubble_profile",
    "bubble_scale",
    "bubble_values",
    "decay_rate_fit",
    "decay_window",
    "indicial_roots",
    "mode_multiplier",
    "mode_ordering_violations",
    "mode_zero_kernel",
    "spectral_derivative",
    "symbol_monotonicity",
    "symbol_values",
    "theta_complex",
    "theta_imaginary",
    "theta_symbol",
    "translate",
]
