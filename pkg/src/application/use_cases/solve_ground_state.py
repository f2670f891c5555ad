"""
Solve Ground State Use Case

Computes the radial ground state at one parameter point and writes the
profile (solution.csv) and its diagnostics (solution.json). The solver is
damped Newton by default; `solver.method = "flow"` runs the gradient flow
with no symmetry imposed instead.
"""

import logging
import math
from pathlib import Path
from typing import Any, Dict, List

from src.application.use_cases.base import CommandUseCase, parameter_record
from src.domain.entities import SolveResult
from src.domain.errors import CknError
from src.infrastructure.constants import problem_constants
from src.infrastructure.solver import flow_ground_state, solve_ground_state
from src.infrastructure.spectral import decay_rate_fit, decay_window, indicial_roots

logger = logging.getLogger(__name__)


def tail_diagnostics(result: SolveResult, sigma0: float) -> Dict[str, Any]:
    """Fitted tail rate on the default window next to the first indicial rate."""
    try:
        rate = decay_rate_fit(result.field, decay_window(result.field.grid)).rate
    except (CknError, ValueError) as e:
        logger.warning(f"Tail decay fit skipped: {e}")
        rate = math.nan
    return {"sigma0": sigma0, "decay_fit": rate}


class SolveGroundStateUseCase(CommandUseCase):
    def _run(self) -> List[Path]:
        params, tolerances = self.config.params, self.config.tolerances
        constants = problem_constants(params, tolerances.quadrature)
        if self.config.solver_method == "flow":
            result = flow_ground_state(params, self.config.grid, constants=constants)
            logger.info(f"Gradient flow settled in {result.iterations} steps (asymmetry {result.asymmetry:.2e})")
        else:
            result = solve_ground_state(params, self.config.grid, tolerance=tolerances.newton, constants=constants)
            logger.info(f"Converged in {result.iterations} iterations (residual {result.residual:.2e})")
        logger.info(f"Energy F = {result.energy:.12g}")

        sigma0 = indicial_roots(params, 1, c_alpha=constants.C_alpha)[0].sigma
        record = parameter_record(params)
        record.update(result.to_record())
        record["method"] = self.config.solver_method
        record.update(tail_diagnostics(result, sigma0))

        rows = zip(result.field.grid.nodes, result.field.values)
        return [
            self.writer.write_csv("solution.csv", ("t", "v"), rows),
            self.writer.write_json("solution.json", record),
        ]
