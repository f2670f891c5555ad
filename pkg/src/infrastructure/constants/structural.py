"""
Structural Constants - Infrastructure Layer

Closed-form scalars of the problem: the exponent p, the fractional Laplacian
constant ς_{n,γ}, the symbol endpoint c_{n,γ}, sphere areas and the bubble
constant.
"""

import math
from functools import lru_cache

from src.domain.value_objects import Parameters
from src.infrastructure.specfun import log_abs_gamma


def exponent_p(params: Parameters) -> float:
    """p = 2n/(n−2γ+2(β−α)); exactly 2 on the Hardy endpoint."""
    return params.p


@lru_cache(maxsize=64)
def sphere_area(dim: int) -> float:
    """|S^{dim−1}| = 2π^{dim/2}/Γ(dim/2), the area of the unit sphere in ℝ^dim."""
    return 2.0 * math.pi ** (dim / 2.0) * math.exp(-log_abs_gamma(dim / 2.0))


def _check_order(gamma: float, upper_inclusive: bool = False) -> None:
    upper_ok = gamma <= 1.0 if upper_inclusive else gamma < 1.0
    if not (gamma > 0.0 and upper_ok):
        raise ValueError(f"gamma must lie in (0, 1), got {gamma}")


def sigma_ng(n: int, gamma: float) -> float:
    """ς_{n,γ} = π^{−n/2} 2^{2γ} Γ(n/2+γ) γ / Γ(1−γ)."""
    _check_order(gamma)
    log_value = (
        -0.5 * n * math.log(math.pi)
        + 2.0 * gamma * math.log(2.0)
        + log_abs_gamma(n / 2.0 + gamma)
        - log_abs_gamma(1.0 - gamma)
    )
    return gamma * math.exp(log_value)


def c_ng(n: int, gamma: float) -> float:
    """c_{n,γ} = 2^{2γ}(Γ((n/2+γ)/2)/Γ((n/2−γ)/2))², the mode-0 symbol at ξ = 0."""
    _check_order(gamma, upper_inclusive=True)
    log_ratio = log_abs_gamma((n / 2.0 + gamma) / 2.0) - log_abs_gamma((n / 2.0 - gamma) / 2.0)
    return 2.0 ** (2.0 * gamma) * math.exp(2.0 * log_ratio)


def structural_constants(n: int, gamma: float) -> tuple[float, float]:
    """
    Args:
        n: Dimension (≥ 2)
        gamma: Order γ in (0, 1)

    Returns:
        (ς_{n,γ}, c_{n,γ}), both strictly positive
    """
    return sigma_ng(n, gamma), c_ng(n, gamma)


def bubble_constant(n: int, gamma: float) -> float:
    """c* with P^(0)b = c* b^{(n+2γ)/(n−2γ)} for the bubble b(t) = (2cosh t)^{−(n−2γ)/2}."""
    _check_order(gamma)
    log_ratio = log_abs_gamma((n + 2.0 * gamma) / 2.0) - log_abs_gamma((n - 2.0 * gamma) / 2.0)
    return 2.0 ** (2.0 * gamma) * math.exp(log_ratio)


def bubble_energy(n: int, gamma: float) -> float:
    """
    Closed-form cylinder energy of the bubble at α = β = 0.

    F(b) = ω^{1−2/p}·2ς⁻¹·c*·(∫b^p)^{1−2/p} with ∫b^p dt = 2^{−n}√π Γ(n/2)/Γ((n+1)/2).
    """
    p = 2.0 * n / (n - 2.0 * gamma)
    omega = sphere_area(n)
    mass = 2.0 ** (-n) * math.sqrt(math.pi) * math.exp(log_abs_gamma(n / 2.0) - log_abs_gamma((n + 1) / 2.0))
    return omega ** (1.0 - 2.0 / p) * 2.0 / sigma_ng(n, gamma) * bubble_constant(n, gamma) * mass ** (1.0 - 2.0 / p)


def kappa_gamma(c0: float, n: int, gamma: float) -> float:
    """κ_γ = c0 + c_{n,γ}; the mass term of the fixed-exponent equation along a γ-branch."""
    return c0 + c_ng(n, gamma)


def power_multiplier(n: int, gamma: float, s: float) -> float:
    """
    λ(s) with (−Δ)^γ|x|^{−s} = λ(s)|x|^{−s−2γ} for 0 < s < n−2γ.

    λ(s) = 2^{2γ}Γ((s+2γ)/2)Γ((n−s)/2) / (Γ(s/2)Γ((n−s−2γ)/2)); it equals ς·κ^{n,s}_{0,γ}.
    """
    if not 0.0 < s < n - 2.0 * gamma:
        raise ValueError(f"s must lie in (0, n-2*gamma), got {s}")
    log_value = (
        log_abs_gamma((s + 2.0 * gamma) / 2.0)
        + log_abs_gamma((n - s) / 2.0)
        - log_abs_gamma(s / 2.0)
        - log_abs_gamma((n - s - 2.0 * gamma) / 2.0)
    )
    return 2.0 ** (2.0 * gamma) * math.exp(log_value)
