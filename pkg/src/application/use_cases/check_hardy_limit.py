"""
Check Hardy Limit Use Case

At β = α+γ no extremal exists; the cutoff family approaches the best constant
2κ from above. Writes the family (hardy.csv) and the summary (hardy.json).
"""

import logging
from pathlib import Path
from typing import List

from src.application.use_cases.base import CommandUseCase
from src.domain.entities import HardyReport
from src.infrastructure.constants import problem_constants
from src.infrastructure.solver import hardy_limit_check, richardson_limit

logger = logging.getLogger(__name__)

LOWER_SLACK = 1e-10


class CheckHardyLimitUseCase(CommandUseCase):
    def _run(self) -> List[Path]:
        params, settings = self.config.params, self.config.hardy
        constants = problem_constants(params, self.config.tolerances.quadrature)
        samples = hardy_limit_check(params, settings.grid, settings.radii, constants)
        report = HardyReport(
            params=params,
            samples=samples,
            two_kappa=2.0 * constants.kappa,
            extrapolated=richardson_limit(samples),
        )

        if not report.monotone:
            logger.warning("Cutoff family values are not decreasing in R")
        below = [sample.radius for sample in samples if sample.value < report.two_kappa * (1.0 - LOWER_SLACK)]
        if below:
            logger.warning(f"Cutoff values fall below 2*kappa at R = {below}")
        logger.info(f"Extrapolated {report.extrapolated:.10g} vs 2*kappa {report.two_kappa:.10g}")

        rows = [(sample.radius, sample.value, sample.value / report.two_kappa) for sample in samples]
        return [
            self.writer.write_csv("hardy.csv", ("R", "F", "ratio"), rows),
            self.writer.write_json("hardy.json", report.to_record()),
        ]
