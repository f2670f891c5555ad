"""
Indicial Roots - Infrastructure Layer

Roots z = τ + iσ of Θ^(0)(z) + C(α) = 0. On the imaginary axis Θ^(0)(iσ) is
a real Gamma quotient with zeros at σ = 2B + 2j and poles at σ = 2A + 2j
(A = n/4 + γ/2, B = n/4 − γ/2, 0 < A − B = γ < 1), so every rung of that
ladder carries exactly one sign change of Θ^(0)(iσ) + C(α):

- C(α) > 0: between the zero 2B + 2j and the pole 2A + 2j
- C(α) < 0: between the pole 2A + 2j − 2 (or 0) and the zero 2B + 2j

Each bracketed root is polished by complex Newton iteration on the
logarithmic derivative of the Gamma quotient.
"""

import logging
from typing import List, Optional

import numpy as np
from scipy.optimize import brentq

from src.domain.errors import NewtonDivergence, RootNotBracketed, SpecialFunctionError
from src.domain.value_objects import IndicialRoot, Parameters
from src.infrastructure.constants import C_alpha
from src.infrastructure.spectral.symbol import gamma_shifts, theta_complex, theta_imaginary, theta_log_derivative

logger = logging.getLogger(__name__)

POLE_OFFSET = 1e-9
RESIDUAL_TOLERANCE = 1e-10
NEWTON_STEPS = 30
# brentq rejects rtol below 4*eps
BRENT_RTOL = 4.0 * float(np.finfo(float).eps)


def _bracket(j: int, a: float, b: float, c_alpha: float) -> tuple[float, float]:
    if c_alpha > 0.0:
        return 2.0 * b + 2.0 * j, 2.0 * a + 2.0 * j - POLE_OFFSET
    if j == 0:
        return 0.0, 2.0 * b
    return 2.0 * a + 2.0 * j - 2.0 + POLE_OFFSET, 2.0 * b + 2.0 * j


def _polish(n: int, gamma: float, c_alpha: float, sigma: float) -> complex:
    """Complex Newton from iσ; returns the last iterate, raising if it runs away."""
    z = complex(0.0, sigma)
    for _ in range(NEWTON_STEPS):
        try:
            theta = theta_complex(n, gamma, z)
            derivative = theta * theta_log_derivative(n, gamma, z)
        except SpecialFunctionError:
            # iterate landed on a zero of Θ: the bracketed value is exact there
            return z
        if derivative == 0.0:
            break
        step = (theta + c_alpha) / derivative
        z -= step
        if abs(z.real) > 1e-6 or abs(z.imag - sigma) > 1e-3:
            raise NewtonDivergence(
                f"Newton polish of the indicial root near sigma={sigma:.12g} ran away to {z}",
                last_iterate=z,
                seed=sigma,
            )
        if abs(step) <= 1e-15 * max(1.0, abs(z)):
            break
    return z


def indicial_roots(
    params: Parameters, count: int, c_alpha: Optional[float] = None, tolerance: float = 1e-9
) -> List[IndicialRoot]:
    """
    First `count` roots of Θ^(0)(z) + C(α) = 0, ordered by σ.

    Args:
        params: Parameter point
        count: Number of roots to return
        c_alpha: Mass term override; computed from params when omitted
        tolerance: κ quadrature tolerance used when C(α) is computed here

    Returns:
        IndicialRoot list with strictly increasing σ and residual ≤ 1e−10

    Raises:
        RootNotBracketed: If a ladder rung shows no sign change
        NewtonDivergence: If polishing leaves the bracket or the residual stays large
    """
    n, gamma = params.n, params.gamma
    if c_alpha is None:
        c_alpha = C_alpha(params, tolerance)
    a, b = gamma_shifts(n, gamma)

    def g(sigma: float) -> float:
        return theta_imaginary(n, gamma, sigma) + c_alpha

    roots: List[IndicialRoot] = []
    for j in range(count):
        lower, upper = _bracket(j, a, b, c_alpha)
        g_lower, g_upper = g(lower), g(upper)
        if g_lower * g_upper > 0.0:
            raise RootNotBracketed(
                f"no sign change of Theta(i*sigma)+C on [{lower:.12g}, {upper:.12g}]",
                index=j,
                lower=lower,
                upper=upper,
                c_alpha=c_alpha,
            )
        sigma = brentq(g, lower, upper, xtol=1e-15, rtol=BRENT_RTOL, maxiter=200)
        z = _polish(n, gamma, c_alpha, sigma)
        polished, tau = max(lower, min(upper, z.imag)), z.real
        residual = abs(g(polished))
        bracketed = abs(g(sigma))
        if bracketed < residual:
            polished, tau, residual = sigma, 0.0, bracketed
        if residual > RESIDUAL_TOLERANCE * max(1.0, abs(c_alpha)):
            raise NewtonDivergence(
                f"indicial root {j} has residual {residual:.3e}", last_iterate=complex(0.0, polished), residual=residual
            )
        roots.append(IndicialRoot(tau=tau, sigma=polished, index=j, residual=residual))
        logger.debug(f"indicial root {j}: sigma={polished:.15g} (residual {residual:.2e})")
    return roots
