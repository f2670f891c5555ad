"""
Compute Constants Use Case

Evaluates the scalar constants of one parameter point and writes constants.json.
"""

import logging
from pathlib import Path
from typing import List

from src.application.use_cases.base import CommandUseCase, parameter_record
from src.infrastructure.constants import bubble_constant, problem_constants

logger = logging.getLogger(__name__)


class ComputeConstantsUseCase(CommandUseCase):
    """ς, c, κ (with its error estimate), C(α), κ_γ and the bubble constant c*."""

    def _run(self) -> List[Path]:
        params = self.config.params
        constants = problem_constants(params, self.config.tolerances.quadrature)
        logger.info(f"kappa = {constants.kappa:.15g} (error {constants.kappa_error:.2e})")
        logger.info(f"C(alpha) = {constants.C_alpha:.15g}")

        record = parameter_record(params)
        record.update(
            {
                "sigma_ng": constants.sigma_ng,
                "c_ng": constants.c_ng,
                "kappa": constants.kappa,
                "kappa_error": constants.kappa_error,
                "C_alpha": constants.C_alpha,
                "kappa_gamma": constants.kappa_gamma,
                "normalization": constants.normalization,
                "bubble_constant": bubble_constant(params.n, params.gamma),
            }
        )
        return [self.writer.write_json("constants.json", record)]
