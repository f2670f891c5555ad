"""
Ground State Solver - Infrastructure Layer

Solves P^(0)v + C(α)v = ςκ·v^{p−1} for a positive, even, decaying v on the
cylinder line. With the coefficient ςκ the constant v ≡ 1 is an exact but
non-decaying solution, so every start is localized by the sech-power preset
envelope before iterating.
"""

import logging
from typing import Optional, Union

import numpy as np

from src.domain.entities import SolveResult
from src.domain.errors import ValidationError, ZeroField
from src.domain.value_objects import BOUNDARY_SMALLNESS, Grid, Parameters, ProblemConstants, RadialField
from src.infrastructure.constants import problem_constants
from src.infrastructure.solver.energy import energy_F
from src.infrastructure.solver.newton import SemilinearProblem, newton, petviashvili
from src.infrastructure.solver.profiles import mass_centroid, preset_profile, require_positive, symmetrize
from src.infrastructure.spectral import indicial_roots, mode_multiplier, translate

logger = logging.getLogger(__name__)

PRESET = "preset"


def require_superlinear(params: Parameters) -> None:
    if params.is_hardy_endpoint or params.p <= 2.0:
        raise ValidationError(
            "p > 2",
            f"beta={params.beta} = alpha+gamma gives p = 2: no extremal exists there, use hardy-check",
        )


def ground_state_problem(params: Parameters, grid: Grid, constants: ProblemConstants) -> SemilinearProblem:
    operator = mode_multiplier(grid, params.n, params.gamma, 0).shifted(constants.C_alpha)
    return SemilinearProblem(operator=operator, coefficient=constants.normalization, exponent=params.p)


def preset_guess(params: Parameters, grid: Grid, constants: ProblemConstants) -> np.ndarray:
    """sech^{2/(p−2)} profile decaying at the first indicial rate σ₀."""
    sigma0 = indicial_roots(params, 1, c_alpha=constants.C_alpha)[0].sigma
    return preset_profile(grid, params.p, sigma0)


def _prepare(
    values: np.ndarray, params: Parameters, grid: Grid, constants: ProblemConstants
) -> tuple[np.ndarray, float]:
    shift = mass_centroid(values, grid)
    if shift != 0.0:
        values = translate(values, grid, -shift)
    if RadialField(grid, values).boundary_ratio > BOUNDARY_SMALLNESS:
        logger.info("Initial field does not decay at the grid ends; localizing it with the preset envelope")
        values = values * preset_guess(params, grid, constants)
    return symmetrize(values, grid), shift


def solve_ground_state(
    params: Parameters,
    grid: Grid,
    init: Union[RadialField, str, None] = PRESET,
    tolerance: float = 1e-10,
    constants: Optional[ProblemConstants] = None,
) -> SolveResult:
    """
    Compute the radial ground state at a parameter point.

    The start is moved so its mass centroid sits at t = 0, projected onto
    the even fields and scaled onto the Nehari manifold. The solution is
    reported at t = 0; `recentering_shift` is the centroid of the start, so a
    start translated by s yields a shift larger by s.

    Args:
        params: Parameter point with p > 2
        grid: Discretization grid
        init: Starting field, or "preset" for the sech-power profile
        tolerance: Sup-norm defect target, relative to max(1, ςκ·max v^{p−1})
        constants: Precomputed constants for params

    Returns:
        SolveResult for the converged field

    Raises:
        ValidationError: On the Hardy endpoint p = 2
        NewtonStall: If the damped Newton iteration stalls
        PositivityLoss: If the converged field changes sign beyond the ringing margin
    """
    require_superlinear(params)
    constants = constants or problem_constants(params)
    problem = ground_state_problem(params, grid, constants)

    if init is None or isinstance(init, str):
        values, shift = preset_guess(params, grid, constants), 0.0
    else:
        if not np.any(init.values):
            raise ZeroField("initial field vanishes identically")
        values, shift = _prepare(init.values, params, grid, constants)
    values = problem.nehari_amplitude(values) * values

    values = petviashvili(problem, values)
    report = newton(problem, values, tolerance)
    values = report.values

    require_positive(values, f"ground state at alpha={params.alpha}, beta={params.beta}")
    drift = mass_centroid(values, grid)
    if drift != 0.0:
        values = translate(values, grid, -drift)

    field = RadialField(grid, values)
    if field.boundary_ratio > BOUNDARY_SMALLNESS:
        logger.warning(
            f"ground state at alpha={params.alpha}, beta={params.beta} is not small at +-T "
            f"(ratio {field.boundary_ratio:.2e}); consider a larger T"
        )
    energy = energy_F(field, params, constants)
    logger.debug(f"Solved alpha={params.alpha}, beta={params.beta}: F={energy:.12g}, residual={report.residual:.2e}")
    return SolveResult(
        field=field,
        residual=report.residual,
        energy=energy,
        normalization=constants.normalization,
        iterations=report.iterations,
        recentering_shift=shift + drift,
        asymmetry=field.asymmetry(),
        boundary_ratio=field.boundary_ratio,
    )
