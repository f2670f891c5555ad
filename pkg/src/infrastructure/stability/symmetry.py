"""
Symmetry Decision - Infrastructure Layer

Sign of the lowest mode-1 eigenvalue λ₁, which separates radial extremals
(λ₁ > 0) from symmetry breaking (λ₁ < 0), the Fourier-space Rayleigh bound
λ₁ ≤ I_p − (p−2)C(α) obtained with the test function v̄, and the Morse
index across modes.
"""

import logging
from typing import Dict, Optional

import numpy as np
from scipy import fft

from src.domain.entities import MorseCount, SolveResult, SymmetryDecision, Verdict
from src.domain.errors import EigDivergence
from src.domain.value_objects import Parameters, ProblemConstants
from src.infrastructure.constants import problem_constants
from src.infrastructure.spectral import mode_multiplier, symbol_values
from src.infrastructure.stability.linearized import assemble_linearized, harmonic_multiplicity
from src.infrastructure.stability.spectrum import lowest_eigs

logger = logging.getLogger(__name__)

MARGINAL_BAND = 1e-6
BOUND_SLACK = 1e-8
MAX_MODE = 64


def rayleigh_quotient_ip(solve: SolveResult, params: Parameters) -> float:
    """I_p = ∫(Θ^(1) − (p−1)Θ^(0))|v̂|² dξ / ∫|v̂|² dξ on the grid frequencies."""
    grid = solve.field.grid
    power = np.abs(fft.rfft(solve.field.values)) ** 2
    power[1:-1] *= 2.0
    first = mode_multiplier(grid, params.n, params.gamma, 1).symbol
    zeroth = mode_multiplier(grid, params.n, params.gamma, 0).symbol
    return float(np.sum((first - (params.p - 1.0) * zeroth) * power) / np.sum(power))


def lambda1_sign(
    solve: SolveResult,
    params: Parameters,
    tolerance: float = MARGINAL_BAND,
    constants: Optional[ProblemConstants] = None,
    eig_tolerance: float = 1e-9,
) -> SymmetryDecision:
    """
    Decide radial stability from the lowest eigenvalue of L̄^(1).

    Args:
        solve: Converged ground state
        params: Its parameter point
        tolerance: Half-width of the Marginal band around zero
        constants: Precomputed constants for params
        eig_tolerance: Eigensolver consistency tolerance

    Returns:
        SymmetryDecision with λ₁, the Rayleigh bound, the verdict and I_p
    """
    constants = constants or problem_constants(params)
    operator = assemble_linearized(1, solve, params, constants)
    lambda1 = lowest_eigs(operator, 1, eig_tolerance).lowest
    ip = rayleigh_quotient_ip(solve, params)
    bound = ip - (params.p - 2.0) * constants.C_alpha
    if lambda1 > bound + BOUND_SLACK:
        logger.warning(f"lambda1={lambda1:.10g} exceeds its Rayleigh bound {bound:.10g}")

    if abs(lambda1) <= tolerance:
        verdict = Verdict.MARGINAL
    elif lambda1 < 0.0:
        verdict = Verdict.SYMMETRY_BROKEN
    else:
        verdict = Verdict.RADIAL_STABLE
    logger.debug(f"alpha={params.alpha}, beta={params.beta}: lambda1={lambda1:.6g} ({verdict.value})")
    return SymmetryDecision(lambda1=lambda1, rayleigh_bound=bound, verdict=verdict, rayleigh_quotient_ip=ip)


def higher_mode_certificate(solve: SolveResult, params: Parameters, constants: ProblemConstants, m: int) -> float:
    """Θ^(m)(0) + C(α) − (p−1)ςκ·max v̄^{p−2}, a lower bound for the spectrum of every mode ≥ m."""
    peak = solve.field.peak
    theta = float(symbol_values(params.n, params.gamma, m, np.zeros(1))[0])
    return theta + constants.C_alpha - (params.p - 1.0) * constants.normalization * peak ** (params.p - 2.0)


def morse_count(
    solve: SolveResult,
    params: Parameters,
    k: int = 6,
    constants: Optional[ProblemConstants] = None,
    eig_tolerance: float = 1e-9,
) -> MorseCount:
    """
    Negative eigenvalues of the full linearization, counted with multiplicity.

    Modes 0 and 1 are diagonalized; the mode-2 certificate bounds everything
    above. A negative certificate pushes the count to the next mode until the
    certificate turns non-negative. The translation eigenvalue of L̄^(0) is
    zero up to discretization error and is not counted.

    Raises:
        EigDivergence: If no certificate up to mode 64 is non-negative
    """
    constants = constants or problem_constants(params)
    negative_by_mode: Dict[int, int] = {}
    mode = 0
    while True:
        if mode > MAX_MODE:
            raise EigDivergence(f"higher-mode certificate stayed negative up to mode {MAX_MODE}")
        operator = assemble_linearized(mode, solve, params, constants)
        report = lowest_eigs(operator, k, eig_tolerance)
        negative_by_mode[mode] = report.morse_index // operator.multiplicity
        mode += 1
        if mode < 2:
            continue
        certificate = higher_mode_certificate(solve, params, constants, mode)
        if certificate >= 0.0:
            break
        logger.warning(f"mode-{mode} certificate {certificate:.3e} is negative; extending the Morse count")

    index = sum(count * harmonic_multiplicity(params.n, m) for m, count in negative_by_mode.items())
    return MorseCount(index=index, negative_by_mode=negative_by_mode, higher_mode_certificate=certificate)
