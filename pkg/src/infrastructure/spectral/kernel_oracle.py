"""
Kernel Quadrature Oracle - Infrastructure Layer

Independent real-space evaluation of the radial operator

    P^(0)v(t) = ς |S^{n−1}| ∫ 𝒦₀(s) (v(t) − v(t+s)) ds + c_{n,γ} v(t),
    𝒦₀(s) = e^{−(n+2γ)|s|/2} ₂F₁((n+2γ)/2, 1+γ; n/2; e^{−2|s|}),

used to cross-check the Fourier multipliers. Pairing s with −s gives
∫_0^∞ 𝒦₀(s) s² q(s) ds with q(s) = (2v(t) − v(t+s) − v(t−s))/s², a smooth
even function with q(0) = −v''(t). q is interpolated by cubic Lagrange
polynomials on each cell and the cell moments of 𝒦₀(s)s² are tabulated once
per grid; the innermost cell carries the s^{1−2γ} endpoint weight.
"""

import logging
import math
from functools import lru_cache

import numpy as np
from scipy.integrate import quad

from src.domain.value_objects import Grid, Parameters, RadialField
from src.infrastructure.constants import sphere_area, structural_constants
from src.infrastructure.specfun import hyp2f1_complement

logger = logging.getLogger(__name__)

GAUSS_POINTS = 12
_EPS_S = 1e-12


def mode_zero_kernel(s: float, n: int, gamma: float) -> float:
    """𝒦₀(s) for s ≠ 0; behaves like (2|s|)^{−1−2γ}Γ(n/2)Γ(1+2γ)/(Γ((n+2γ)/2)Γ(1+γ)) near 0."""
    s = abs(s)
    lam = (n + 2.0 * gamma) / 2.0
    return math.exp(-lam * s) * hyp2f1_complement(lam, 1.0 + gamma, n / 2.0, -math.expm1(-2.0 * s))


def _lagrange(u):
    """Cubic Lagrange basis on the nodes −1, 0, 1, 2."""
    return (
        -u * (u - 1.0) * (u - 2.0) / 6.0,
        (u + 1.0) * (u - 1.0) * (u - 2.0) / 2.0,
        -(u + 1.0) * u * (u - 2.0) / 2.0,
        (u + 1.0) * u * (u - 1.0) / 6.0,
    )


@lru_cache(maxsize=16)
def _node_weights(n: int, gamma: float, points: int, spacing: float) -> np.ndarray:
    """Weights G[m], m = 0..N/2, with ∫_0^{(N/2−1)h} 𝒦₀(s)s²q(s)ds ≈ Σ_m G[m] q(mh)."""
    h = spacing
    half = points // 2
    weights = np.zeros(half + 1)

    # innermost cell: s^{1−2γ} endpoint weight, q(−h) = q(h)
    for k, node in enumerate((1, 0, 1, 2)):
        def integrand(s, k=k):
            s = max(s, _EPS_S)
            return mode_zero_kernel(s, n, gamma) * s ** (1.0 + 2.0 * gamma) * _lagrange(s / h)[k]

        moment, _ = quad(integrand, 0.0, h, weight="alg", wvar=(1.0 - 2.0 * gamma, 0.0))
        weights[node] += moment

    nodes, gauss = np.polynomial.legendre.leggauss(GAUSS_POINTS)
    u = 0.5 * (nodes + 1.0)
    gauss = 0.5 * gauss
    basis = np.array(_lagrange(u))
    for j in range(1, half - 1):
        s = (j + u) * h
        kernel = np.array([mode_zero_kernel(value, n, gamma) for value in s])
        moments = h * basis @ (gauss * kernel * s * s)
        weights[j - 1 : j + 3] += moments

    weights.setflags(write=False)
    logger.debug(f"Tabulated mode-0 kernel moments for n={n}, gamma={gamma}, N={points}, h={h:.4g}")
    return weights


def _second_derivative(values: np.ndarray, h: float) -> np.ndarray:
    outer = np.roll(values, -2) + np.roll(values, 2)
    inner = np.roll(values, -1) + np.roll(values, 1)
    return (16.0 * inner - outer - 30.0 * values) / (12.0 * h * h)


def apply_P0_kernel_oracle(field: RadialField, params: Parameters) -> RadialField:
    """
    Evaluate P^(0)v by direct quadrature against the mode-0 kernel.

    Args:
        field: Samples small at the grid ends
        params: Parameter point supplying n and γ

    Returns:
        P^(0)field on the same grid

    Raises:
        BoundaryLeak: If the field is not small at ±T
        NonConvergence: If a hypergeometric series misses its tolerance
    """
    field.require_small_boundary()
    grid: Grid = field.grid
    h = grid.spacing
    v = field.values
    weights = _node_weights(params.n, params.gamma, grid.points, h)

    accumulated = weights[0] * -_second_derivative(v, h)
    for m in range(1, weights.size):
        if weights[m] == 0.0:
            continue
        difference = 2.0 * v - np.roll(v, -m) - np.roll(v, m)
        accumulated += weights[m] * difference / (m * h) ** 2

    sigma, c = structural_constants(params.n, params.gamma)
    return field.with_values(sigma * sphere_area(params.n) * accumulated + c * v)
