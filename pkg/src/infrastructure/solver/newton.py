"""
Semilinear Newton Solver - Infrastructure Layer

Positive solutions of L v = a·|v|^{p−2}v where L is a positive Fourier
multiplier on a periodic grid. A Petviashvili warm-up with positivity
projection brings the iterate into the basin; damped Newton-GMRES with the
Fourier-diagonal preconditioner L⁻¹ finishes. Iterates are kept even about
t = 0, which removes the translation direction from the Jacobian.
"""

import logging
from dataclasses import dataclass

import numpy as np
from scipy.sparse.linalg import LinearOperator, gmres

from src.domain.errors import NewtonStall, ZeroField
from src.domain.value_objects import Grid
from src.infrastructure.solver.profiles import symmetrize
from src.infrastructure.spectral import FourierMultiplier

logger = logging.getLogger(__name__)

MAX_ITERATIONS = 50
WARMUP_ITERATIONS = 400
WARMUP_TOLERANCE = 1e-4
ARMIJO = 1e-4
MIN_STEP = 2.0**-20


@dataclass(frozen=True, eq=False)
class SemilinearProblem:
    """L v = coefficient·|v|^{exponent−2}v on the grid of `operator`."""

    operator: FourierMultiplier
    coefficient: float
    exponent: float

    @property
    def grid(self) -> Grid:
        return self.operator.grid

    def nonlinearity(self, values: np.ndarray) -> np.ndarray:
        return self.coefficient * np.abs(values) ** (self.exponent - 2.0) * values

    def defect(self, values: np.ndarray) -> np.ndarray:
        return self.operator(values) - self.nonlinearity(values)

    def scale(self, values: np.ndarray) -> float:
        """Magnitude the residual tolerance is measured against."""
        return max(1.0, float(np.max(np.abs(self.nonlinearity(values)))))

    def nehari_amplitude(self, values: np.ndarray) -> float:
        """λ with ⟨λv, Lλv⟩ = a∫|λv|^p, i.e. λv on the Nehari manifold."""
        quadratic = float(np.dot(values, self.operator(values)))
        mass = self.coefficient * float(np.sum(np.abs(values) ** self.exponent))
        if quadratic <= 0.0 or mass <= 0.0:
            raise ZeroField("cannot scale a field without mass onto the Nehari manifold")
        return (quadratic / mass) ** (1.0 / (self.exponent - 2.0))


@dataclass(frozen=True)
class NewtonReport:
    values: np.ndarray
    residual: float
    iterations: int


def petviashvili(problem: SemilinearProblem, values: np.ndarray, max_iterations: int = WARMUP_ITERATIONS) -> np.ndarray:
    """
    Stabilized fixed-point iteration v ← M^{(p−1)/(p−2)}·L⁻¹(a v₊^{p−1}).

    M = ⟨v, Lv⟩/⟨v, a v^{p−1}⟩ is the stabilizing factor; v₊ = max(v, 0) keeps
    the iterate non-negative. Stops once the defect is below 1e−4 of the
    nonlinearity scale.
    """
    grid = problem.grid
    inverse = problem.operator.inverse()
    power = (problem.exponent - 1.0) / (problem.exponent - 2.0)
    for iteration in range(1, max_iterations + 1):
        values = np.maximum(values, 0.0)
        nonlinear = problem.nonlinearity(values)
        denominator = float(np.dot(values, nonlinear))
        if denominator <= 0.0:
            raise ZeroField("positivity projection removed the whole field")
        factor = float(np.dot(values, problem.operator(values))) / denominator
        values = symmetrize(factor**power * inverse(nonlinear), grid)
        residual = float(np.max(np.abs(problem.defect(values))))
        if residual <= WARMUP_TOLERANCE * problem.scale(values):
            logger.debug(f"Petviashvili warm-up settled after {iteration} iterations (residual {residual:.3e})")
            break
    else:
        logger.debug(f"Petviashvili warm-up used its {max_iterations} iterations")
    return values


def _jacobian(problem: SemilinearProblem, values: np.ndarray) -> LinearOperator:
    size = problem.grid.points
    weight = problem.coefficient * (problem.exponent - 1.0) * np.abs(values) ** (problem.exponent - 2.0)
    return LinearOperator((size, size), matvec=lambda x: problem.operator(x) - weight * x, dtype=float)


def newton(
    problem: SemilinearProblem,
    values: np.ndarray,
    tolerance: float,
    max_iterations: int = MAX_ITERATIONS,
) -> NewtonReport:
    """
    Damped Newton-GMRES with Armijo backtracking on ‖G‖².

    Args:
        problem: The semilinear equation
        values: Starting iterate, even about t = 0
        tolerance: Target for sup|G| relative to the nonlinearity scale
        max_iterations: Newton step budget

    Returns:
        NewtonReport with the converged samples, sup-norm defect and step count

    Raises:
        NewtonStall: If backtracking falls below 2⁻²⁰ or the budget runs out;
            `best_values` holds the last accepted iterate
    """
    grid = problem.grid
    size = grid.points
    preconditioner = problem.operator.inverse()
    precondition = LinearOperator((size, size), matvec=preconditioner, dtype=float)

    values = symmetrize(np.asarray(values, dtype=float), grid)
    defect = problem.defect(values)
    merit = float(np.dot(defect, defect))
    for iteration in range(max_iterations + 1):
        residual = float(np.max(np.abs(defect)))
        logger.debug(f"Newton iteration {iteration}: residual {residual:.3e}")
        if residual <= tolerance * problem.scale(values):
            return NewtonReport(values=values, residual=residual, iterations=iteration)
        if iteration == max_iterations:
            break

        forcing = min(1e-4, max(1e-13, residual))
        direction, info = gmres(
            _jacobian(problem, values), -defect, rtol=forcing, restart=60, maxiter=20, M=precondition
        )
        if info < 0:
            raise NewtonStall("GMRES broke down", best_values=values, residual=residual)

        step = 1.0
        while True:
            trial = symmetrize(values + step * direction, grid)
            trial_defect = problem.defect(trial)
            trial_merit = float(np.dot(trial_defect, trial_defect))
            if trial_merit <= (1.0 - 2.0 * ARMIJO * step) * merit:
                break
            step *= 0.5
            if step < MIN_STEP:
                raise NewtonStall(
                    f"line search stalled at residual {residual:.3e}",
                    best_values=values,
                    residual=residual,
                    iteration=iteration,
                )
        values, defect, merit = trial, trial_defect, trial_merit

    raise NewtonStall(
        f"no convergence in {max_iterations} Newton steps (residual {residual:.3e})",
        best_values=values,
        residual=residual,
    )
