"""
Problem Constants - Infrastructure Layer

Per-parameter scalars: κ^n_{α,γ} = κ^{n,ν}_{α,γ}, the mass term C(α) and the
symmetry-breaking bound curve β = h(α).
"""

import logging
import math
from functools import lru_cache

from src.domain.value_objects import BoundCurvePoint, Parameters, ProblemConstants
from src.infrastructure.constants.kappa import kappa_estimate
from src.infrastructure.constants.structural import structural_constants

logger = logging.getLogger(__name__)

DEFAULT_TOLERANCE = 1e-9


def kappa(params: Parameters, tolerance: float = DEFAULT_TOLERANCE) -> float:
    """κ^n_{α,γ}: the weighted constant at homogeneity ν = (n−2γ)/2 − α. Strictly positive."""
    return kappa_estimate(params.n, params.gamma, params.alpha, params.nu, tolerance).value


def C_alpha(params: Parameters, tolerance: float = DEFAULT_TOLERANCE) -> float:
    """C(α) = ς_{n,γ}κ − c_{n,γ}; zero at α = 0 and decreasing in α."""
    return problem_constants(params, tolerance).C_alpha


@lru_cache(maxsize=1024)
def _constants_at(n: int, gamma: float, alpha: float, tolerance: float) -> ProblemConstants:
    sigma, c = structural_constants(n, gamma)
    estimate = kappa_estimate(n, gamma, alpha, (n - 2.0 * gamma) / 2.0 - alpha, tolerance)
    c_alpha = sigma * estimate.value - c
    return ProblemConstants(
        sigma_ng=sigma,
        c_ng=c,
        kappa=estimate.value,
        C_alpha=c_alpha,
        kappa_gamma=c_alpha + c,
        kappa_error=estimate.abs_error,
    )


def problem_constants(params: Parameters, tolerance: float = DEFAULT_TOLERANCE) -> ProblemConstants:
    """
    Evaluate every scalar the cylinder equations need at one parameter point.

    β does not enter any of them, so points sharing (n, γ, α) share one cache entry.

    Args:
        params: Parameter point
        tolerance: Relative tolerance of the κ quadrature

    Returns:
        ProblemConstants with ς, c, κ, C(α), κ_γ = C(α) + c and the κ error estimate
    """
    return _constants_at(params.n, params.gamma, params.alpha, tolerance)


def h_alpha(params: Parameters, M: float, tolerance: float = DEFAULT_TOLERANCE) -> BoundCurvePoint:
    """
    Bound curve β = h(α) below which mode 1 of the linearization goes negative.

    h(α) = (4γC(α) − M(n−2γ)) / (4C(α) + 2M) + α. The bound is informative only
    when it falls inside (α, α+γ); `clamped` pins it to that interval.

    Args:
        params: Parameter point (β is ignored)
        M: Positive constant, typically |I_p| from a solved ground state
        tolerance: κ quadrature tolerance

    Returns:
        BoundCurvePoint with the raw value, the clamped value and the inside flag
    """
    if not M > 0.0:
        raise ValueError(f"M must be positive, got {M}")
    n, g, alpha = params.n, params.gamma, params.alpha
    c_alpha = C_alpha(params, tolerance)
    denominator = 4.0 * c_alpha + 2.0 * M
    if denominator == 0.0:
        value = math.copysign(math.inf, 4.0 * g * c_alpha - M * (n - 2.0 * g))
    else:
        value = (4.0 * g * c_alpha - M * (n - 2.0 * g)) / denominator + alpha
    inside = alpha < value < alpha + g
    clamped = min(max(value, alpha), alpha + g)
    if not inside:
        logger.debug(f"h(alpha={alpha}) = {value:.6g} lies outside (alpha, alpha+gamma); bound is vacuous")
    return BoundCurvePoint(h=value, clamped=clamped, inside=inside)
