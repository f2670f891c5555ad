"""
Fourier Symbols - Infrastructure Layer

Per-mode symbols Θ^(m)_γ(ξ) of the conformal fractional Laplacian on the
cylinder, their continuation to the imaginary axis, and the numerical checks
on their shape (monotonicity in |ξ|, ordering across modes).
"""

import logging
from typing import List, Tuple

import numpy as np

from src.domain.value_objects import Parameters
from src.infrastructure.specfun import digamma, gamma_ratio_sq, gamma_real, log_gamma, rgamma

logger = logging.getLogger(__name__)


def gamma_shifts(n: int, gamma: float, m: int = 0) -> Tuple[float, float]:
    """(A, B) = (n/4 + γ/2 + m/2, n/4 − γ/2 + m/2)."""
    return n / 4.0 + gamma / 2.0 + m / 2.0, n / 4.0 - gamma / 2.0 + m / 2.0


def symbol_values(n: int, gamma: float, m: int, xi):
    """
    Θ^(m)_γ(ξ) = 2^{2γ} |Γ(A + iξ/2)|² / |Γ(B + iξ/2)|².

    Accepts γ ∈ (0, 1]. At γ = 1 the Gamma ratio collapses to the local
    symbol ξ² + (n/2 − 1 + m)², which is returned in closed form.

    Args:
        n: Dimension
        gamma: Order in (0, 1]
        m: Spherical-harmonic mode, m ≥ 0
        xi: Real scalar or array of frequencies

    Returns:
        float for scalar input, ndarray otherwise
    """
    if m < 0:
        raise ValueError(f"mode must be non-negative, got {m}")
    if not 0.0 < gamma <= 1.0:
        raise ValueError(f"gamma must lie in (0, 1], got {gamma}")
    if gamma == 1.0:
        xi_array = np.asarray(xi, dtype=float)
        local = xi_array**2 + (n / 2.0 - 1.0 + m) ** 2
        return float(local) if xi_array.ndim == 0 else local
    a, b = gamma_shifts(n, gamma, m)
    return 2.0 ** (2.0 * gamma) * gamma_ratio_sq(a, b, xi)


def theta_symbol(m: int, params: Parameters, xi):
    """Θ^(m)_γ(ξ) at the parameter point; strictly positive and even in ξ."""
    return symbol_values(params.n, params.gamma, m, xi)


def theta_imaginary(n: int, gamma: float, sigma):
    """
    Θ^(0)(iσ) = 2^{2γ} Γ(A+σ/2)Γ(A−σ/2) / (Γ(B+σ/2)Γ(B−σ/2)) for real σ.

    Zeros sit at σ = 2B + 2j and poles at σ = 2A + 2j, j = 0, 1, ...
    """
    a, b = gamma_shifts(n, gamma)
    sigma = np.asarray(sigma, dtype=float)
    value = (
        2.0 ** (2.0 * gamma)
        * gamma_real(a + sigma / 2.0)
        * gamma_real(a - sigma / 2.0)
        * rgamma(b + sigma / 2.0)
        * rgamma(b - sigma / 2.0)
    )
    return float(value) if np.ndim(value) == 0 else value


def theta_complex(n: int, gamma: float, z: complex) -> complex:
    """Θ^(0)(z) = 2^{2γ} Γ(A+iz/2)Γ(A−iz/2) / (Γ(B+iz/2)Γ(B−iz/2)) for complex z."""
    a, b = gamma_shifts(n, gamma)
    half = 0.5j * z
    log_value = log_gamma(a + half) + log_gamma(a - half) - log_gamma(b + half) - log_gamma(b - half)
    return complex(2.0 ** (2.0 * gamma) * np.exp(log_value))


def theta_log_derivative(n: int, gamma: float, z: complex) -> complex:
    """Θ'(z)/Θ(z) = (i/2)[ψ(A+iz/2) − ψ(A−iz/2) − ψ(B+iz/2) + ψ(B−iz/2)]."""
    a, b = gamma_shifts(n, gamma)
    half = 0.5j * z
    return 0.5j * (digamma(a + half) - digamma(a - half) - digamma(b + half) + digamma(b - half))


def symbol_monotonicity(n: int, gamma: float, m: int, xi) -> bool:
    """True when Θ^(m) is non-decreasing in |ξ| on the sampled frequencies."""
    magnitudes = np.unique(np.abs(np.asarray(xi, dtype=float)))
    values = symbol_values(n, gamma, m, magnitudes)
    steps = np.diff(np.atleast_1d(values))
    monotone = bool(np.all(steps >= -1e-14 * np.abs(np.atleast_1d(values)[1:])))
    if not monotone:
        logger.warning(f"Theta^({m}) is not monotone in |xi| for n={n}, gamma={gamma}")
    return monotone


def mode_ordering_violations(n: int, gamma: float, modes: int, xi) -> List[Tuple[int, float]]:
    """
    Check Θ^(0) < Θ^(1) < … < Θ^(modes−1) on the sampled frequencies.

    Returns:
        One (m, ξ) pair per adjacent couple of modes where Θ^(m)(ξ) ≥ Θ^(m+1)(ξ),
        naming the first offending frequency; empty when the ordering holds
    """
    xi_array = np.atleast_1d(np.asarray(xi, dtype=float))
    violations: List[Tuple[int, float]] = []
    lower = symbol_values(n, gamma, 0, xi_array)
    for m in range(modes - 1):
        upper = symbol_values(n, gamma, m + 1, xi_array)
        bad = np.nonzero(lower >= upper)[0]
        if bad.size:
            violations.append((m, float(xi_array[bad[0]])))
            logger.warning(f"mode ordering fails between m={m} and m={m + 1} at xi={xi_array[bad[0]]:.6g}")
        lower = upper
    return violations
