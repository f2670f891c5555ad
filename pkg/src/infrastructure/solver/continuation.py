"""
Continuation in γ - Infrastructure Layer

Follows the branch of positive even solutions of the fixed-exponent equation
P_γ^(0)v + c0·v = v^{p0−1} from γ0 to γ1 by secant prediction and Newton
correction. At γ = 1 the operator is −d²/dt² + (n−2)²/4 and the branch ends
at the closed-form soliton.
"""

import logging
from dataclasses import replace
from typing import List, Optional

import numpy as np

from src.domain.entities import BranchPoint
from src.domain.errors import NewtonStall, PositivityLoss, StepFailure, ZeroField
from src.domain.value_objects import Grid, RadialField
from src.infrastructure.constants import kappa_gamma
from src.infrastructure.solver.newton import NewtonReport, SemilinearProblem, newton, petviashvili
from src.infrastructure.solver.profiles import require_positive, sech_power, soliton_profile
from src.infrastructure.spectral import mode_multiplier

logger = logging.getLogger(__name__)

MAX_HALVINGS = 10
ENDPOINT_SNAP = 1e-12


def branch_problem(grid: Grid, n: int, gamma: float, c0: float, p0: float) -> SemilinearProblem:
    operator = mode_multiplier(grid, n, gamma, 0).shifted(c0)
    return SemilinearProblem(operator=operator, coefficient=1.0, exponent=p0)


def soliton_distance(field: RadialField, n: int, c0: float, p0: float) -> float:
    """‖v − v*‖∞ / ‖v*‖∞ against the γ = 1 soliton centered at t = 0."""
    exact = soliton_profile(field.grid, n, c0, p0)
    return float(np.max(np.abs(field.values - exact)) / np.max(exact))


def _check_admissible(c0: float, p0: float, gamma0: float, gamma1: float, steps: int, n: int) -> None:
    for gamma in (gamma0, gamma1):
        if not 0.0 < gamma <= 1.0:
            raise ValueError(f"continuation needs gamma in (0, 1], got {gamma}")
    if steps < 1:
        raise ValueError(f"steps must be positive, got {steps}")
    lowest = min(gamma0, gamma1)
    upper = np.inf if n <= 2.0 * lowest else 2.0 * n / (n - 2.0 * lowest)
    if not 2.0 < p0 < upper:
        raise ValueError(f"p0 must lie in (2, {upper}), got {p0}")


def _require_mass(c0: float, n: int, gamma: float) -> float:
    mass = kappa_gamma(c0, n, gamma)
    if mass <= 0.0:
        raise ValueError(f"Theta_gamma(0) + c0 = {mass} <= 0 at gamma={gamma}: the symbol has a real zero")
    return mass


def _corrected(report: NewtonReport, gamma: float) -> np.ndarray:
    values = report.values
    peak = float(values.max())
    if peak <= 0.0:
        raise ZeroField(f"branch collapsed to zero at gamma={gamma}")
    require_positive(values, f"branch solution at gamma={gamma}")
    return values


def _point(
    grid: Grid, n: int, gamma: float, c0: float, p0: float, values: np.ndarray, residual: float
) -> BranchPoint:
    spacing = grid.spacing
    problem = branch_problem(grid, n, gamma, c0, p0)
    return BranchPoint(
        gamma=gamma,
        field=RadialField(grid, values),
        residual=residual,
        kappa_gamma=kappa_gamma(c0, n, gamma),
        l2=float(np.dot(values, values)) * spacing,
        lp=float(np.sum(np.abs(values) ** p0)) * spacing,
        quadratic=float(np.dot(values, problem.operator(values))) * spacing,
    )


def _first_point(grid: Grid, n: int, gamma: float, c0: float, p0: float, tolerance: float) -> NewtonReport:
    mass = _require_mass(c0, n, gamma)
    problem = branch_problem(grid, n, gamma, c0, p0)
    start = sech_power(grid.nodes, (p0 - 2.0) * np.sqrt(mass) / 2.0, 2.0 / (p0 - 2.0))
    start = petviashvili(problem, problem.nehari_amplitude(start) * start)
    return newton(problem, start, tolerance)


def continuation_gamma(
    c0: float,
    p0: float,
    gamma0: float,
    gamma1: float,
    steps: int,
    grid: Grid,
    n: int = 3,
    tolerance: float = 1e-10,
) -> List[BranchPoint]:
    """
    March the solution branch of P_γ^(0)v + c0·v = v^{p0−1} from γ0 to γ1.

    Each step predicts from the secant through the last two points and
    corrects with Newton. A failed correction halves the step; a point that
    still fails after ten halvings aborts the march.

    Args:
        c0: Mass shift, with Θ_γ^(0)(0) + c0 > 0 along the whole range
        p0: Fixed exponent in (2, 2n/(n−2γ))
        gamma0: Starting order
        gamma1: Final order, 1 allowed
        steps: Nominal number of equal γ steps
        grid: Discretization grid
        n: Dimension
        tolerance: Newton defect target

    Returns:
        BranchPoints from γ0 to γ1; the γ = 1 point carries its soliton distance

    Raises:
        ValueError: If the parameters are outside the admissible range
        StepFailure: If a step fails after ten halvings
    """
    _check_admissible(c0, p0, gamma0, gamma1, steps, n)
    first = _first_point(grid, n, gamma0, c0, p0, tolerance)
    points = [_point(grid, n, gamma0, c0, p0, _corrected(first, gamma0), first.residual)]
    logger.debug(f"Branch start gamma={gamma0}: residual {first.residual:.2e}")

    nominal = (gamma1 - gamma0) / steps
    previous: Optional[BranchPoint] = None
    current = points[0]
    while abs(gamma1 - current.gamma) > ENDPOINT_SNAP:
        step = nominal
        for halving in range(MAX_HALVINGS + 1):
            target = current.gamma + step
            if abs(step) >= abs(gamma1 - current.gamma) - ENDPOINT_SNAP:
                target = gamma1
            predictor = current.field.values
            if previous is not None:
                slope = (current.field.values - previous.field.values) / (current.gamma - previous.gamma)
                predictor = predictor + (target - current.gamma) * slope
            try:
                _require_mass(c0, n, target)
                report = newton(branch_problem(grid, n, target, c0, p0), predictor, tolerance)
                values = _corrected(report, target)
                break
            except (NewtonStall, PositivityLoss, ZeroField) as error:
                logger.debug(f"Continuation step to gamma={target} failed ({error.kind}); halving")
                step *= 0.5
        else:
            raise StepFailure(
                f"continuation step from gamma={current.gamma} failed after {MAX_HALVINGS} halvings",
                gamma=current.gamma,
            )
        previous, current = current, _point(grid, n, target, c0, p0, values, report.residual)
        points.append(current)
        logger.debug(f"Branch point gamma={target}: residual {report.residual:.2e}")

    if points[-1].gamma == 1.0:
        endpoint = points[-1]
        points[-1] = replace(endpoint, soliton_distance=soliton_distance(endpoint.field, n, c0, p0))
    return points
