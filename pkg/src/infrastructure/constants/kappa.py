"""
Weighted Constant κ - Infrastructure Layer

Quadrature for κ^{n,ᾱ}_{α,γ}. The principal value of the defining integral is
removed by folding ρ < 1 onto ρ > 1, which leaves the absolutely integrable
radial integral

    κ = ∫_1^∞ (1−ρ^{−ᾱ}) ρ^{−1} (ρ^{n−α} − ρ^{2γ+α+ᾱ}) S(ρ) dρ,

with the sphere average S(ρ) = ∫_{S^{n−1}} (1+ρ²−2ρ⟨σ,θ⟩)^{−(n+2γ)/2} dθ.
S is evaluated three ways depending on ρ:

- ρ < 1.5: closed form through ₂F₁ taken at the distance 1−ρ^{−2} from its
  singular point, where the integrand carries the |ρ−1|^{−1−2γ} kernel peak
- 1.5 ≤ ρ ≤ 4: Gauss-Jacobi rule in s = ⟨σ,θ⟩ with weight (1−s²)^{(n−3)/2}
- ρ > 4: the ₂F₁ series integrated term by term in closed form
"""

import logging
import math
from functools import lru_cache

import numpy as np
from numpy.polynomial.chebyshev import chebgauss
from scipy.integrate import quad
from scipy.special import roots_jacobi

from src.domain.errors import DivergentIntegral, QuadratureBudgetExceeded
from src.domain.value_objects import QuadratureEstimate
from src.infrastructure.constants.structural import sphere_area
from src.infrastructure.specfun import hyp2f1_complement

logger = logging.getLogger(__name__)

ALPHA_CLAMP = 1e-6
CLOSED_FORM_LIMIT = 1.5
TAIL_START = 4.0
ANGULAR_NODES = 80
QUAD_LIMIT = 200
TAIL_TERMS = 400


@lru_cache(maxsize=16)
def _angular_rule(n: int) -> tuple[np.ndarray, np.ndarray]:
    if n == 2:
        nodes, weights = chebgauss(ANGULAR_NODES)
    else:
        shape = (n - 3) / 2.0
        nodes, weights = roots_jacobi(ANGULAR_NODES, shape, shape)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def sphere_average(n: int, gamma: float, rho: float) -> float:
    """
    S(ρ) = ∫_{S^{n−1}} |ρσ − θ|^{−(n+2γ)} dθ for ρ > 1.

    Args:
        n: Dimension
        gamma: Order γ
        rho: Radius strictly greater than one

    Returns:
        The sphere integral, which blows up like (ρ−1)^{−1−2γ} as ρ → 1
    """
    lam = (n + 2.0 * gamma) / 2.0
    log_rho = math.log(rho)
    if rho < CLOSED_FORM_LIMIT:
        y = -math.expm1(-2.0 * log_rho)
        return sphere_area(n) * math.exp(-2.0 * lam * log_rho) * hyp2f1_complement(lam, 1.0 + gamma, n / 2.0, y)
    nodes, weights = _angular_rule(n)
    values = (1.0 + rho * rho - 2.0 * rho * nodes) ** (-lam)
    return sphere_area(n - 1) * float(np.dot(weights, values))


def _radial_weight(n: int, gamma: float, alpha: float, alpha_bar: float, rho: float) -> float:
    log_rho = math.log(rho)
    return (
        -math.expm1(-alpha_bar * log_rho)
        * math.exp((2.0 * gamma + alpha + alpha_bar - 1.0) * log_rho)
        * math.expm1((n - 2.0 * alpha - 2.0 * gamma - alpha_bar) * log_rho)
    )


def _integrand(rho: float, n: int, gamma: float, alpha: float, alpha_bar: float) -> float:
    if rho <= 1.0:
        return 0.0
    return _radial_weight(n, gamma, alpha, alpha_bar, rho) * sphere_average(n, gamma, rho)


def _tail(n: int, gamma: float, alpha: float, alpha_bar: float, start: float) -> float:
    """∫_start^∞ of the integrand, using S(ρ) = |S^{n−1}| Σ_k f_k ρ^{−(n+2γ)−2k}."""
    lam = (n + 2.0 * gamma) / 2.0
    terms = (
        (1.0, -1.0 - alpha - 2.0 * gamma),
        (-1.0, alpha + alpha_bar - 1.0 - n),
        (-1.0, -alpha - alpha_bar - 1.0 - 2.0 * gamma),
        (1.0, alpha - 1.0 - n),
    )
    log_start = math.log(start)
    coefficient = 1.0
    total = 0.0
    for k in range(TAIL_TERMS):
        contribution = 0.0
        for sign, exponent in terms:
            power = exponent - 2.0 * k + 1.0
            contribution += sign * math.exp(power * log_start) / -power
        step = coefficient * contribution
        total += step
        if k > 0 and abs(step) <= 1e-17 * max(abs(total), 1e-300):
            break
        coefficient *= (lam + k) * (1.0 + gamma + k) / ((n / 2.0 + k) * (k + 1.0))
    return sphere_area(n) * total


def _check_finite(n: int, gamma: float, alpha: float, alpha_bar: float) -> None:
    if alpha < -2.0 * gamma:
        raise DivergentIntegral(
            f"kappa diverges at infinity for alpha={alpha} < -2*gamma", alpha=alpha, gamma=gamma
        )
    if alpha >= n or not -2.0 * gamma < alpha + alpha_bar < n:
        raise DivergentIntegral(
            f"kappa requires alpha < n and -2*gamma < alpha+alpha_bar < n (alpha={alpha}, alpha_bar={alpha_bar})",
            alpha=alpha,
            alpha_bar=alpha_bar,
        )


def _quadpack_code(message: str) -> int:
    text = message.lower()
    if "maximum number of subdivisions" in text:
        return 1
    if "prevents" in text:
        return 2
    if "extremely bad" in text:
        return 3
    if "divergent" in text:
        return 5
    return 4


def _integrate(lower: float, upper: float, args: tuple, tolerance: float) -> tuple[float, float]:
    result = quad(
        _integrand, lower, upper, args=args, epsabs=0.0, epsrel=tolerance, limit=QUAD_LIMIT, full_output=1
    )
    value, error = result[0], result[1]
    if len(result) == 3:
        return value, error

    message = str(result[3])
    code = _quadpack_code(message)
    if code == 5:
        raise DivergentIntegral(f"kappa quadrature on [{lower}, {upper}] looks divergent", lower=lower, upper=upper)
    if code != 2:
        raise QuadratureBudgetExceeded(
            f"kappa quadrature on [{lower}, {upper}] failed: {' '.join(message.split())}",
            lower=lower,
            upper=upper,
            abs_error=error,
        )
    logger.warning(f"kappa quadrature on [{lower}, {upper}] hit round-off (error estimate {error:.2e})")
    return value, error


@lru_cache(maxsize=512)
def kappa_estimate(n: int, gamma: float, alpha: float, alpha_bar: float, tolerance: float = 1e-9) -> QuadratureEstimate:
    """
    κ^{n,ᾱ}_{α,γ} together with the quadrature error estimate.

    Args:
        n: Dimension
        gamma: Order γ in (0, 1)
        alpha: Weight α, clamped to α ≥ −2γ + 1e−6
        alpha_bar: Homogeneity ᾱ
        tolerance: Relative tolerance handed to the outer adaptive quadrature

    Returns:
        QuadratureEstimate with the value and the summed absolute error estimate

    Raises:
        DivergentIntegral: If the integral is not finite for these exponents
        QuadratureBudgetExceeded: If the adaptive rule exhausts its subdivisions
    """
    _check_finite(n, gamma, alpha, alpha_bar)
    if alpha_bar == 0.0:
        return QuadratureEstimate(0.0, 0.0)
    alpha = max(alpha, -2.0 * gamma + ALPHA_CLAMP)

    args = (n, gamma, alpha, alpha_bar)
    near, near_error = _integrate(1.0, CLOSED_FORM_LIMIT, args, tolerance)
    middle, middle_error = _integrate(CLOSED_FORM_LIMIT, TAIL_START, args, tolerance)
    tail = _tail(n, gamma, alpha, alpha_bar, TAIL_START)
    value = near + middle + tail
    error = near_error + middle_error + 1e-15 * abs(tail)
    logger.debug(
        f"kappa(n={n}, gamma={gamma}, alpha={alpha}, alpha_bar={alpha_bar}) = {value:.15g} (error {error:.2e})"
    )
    return QuadratureEstimate(value=value, abs_error=error)


def kappa_general(n: int, gamma: float, alpha: float, alpha_bar: float, tolerance: float = 1e-9) -> float:
    """κ^{n,ᾱ}_{α,γ}; see kappa_estimate for the error estimate."""
    return kappa_estimate(n, gamma, alpha, alpha_bar, tolerance).value
