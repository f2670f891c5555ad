"""
Sweep Region Use Case

Samples the (α, β) plane at fixed (n, γ), writes one row per point to
sweep.csv and the interpolated λ₁ = 0 curve to contour.csv.
"""

import logging
from pathlib import Path
from typing import List

from src.application.use_cases.base import CommandUseCase
from src.domain.entities import SWEEP_COLUMNS
from src.domain.value_objects import Parameters
from src.infrastructure.stability import contour, region_sweep

logger = logging.getLogger(__name__)


class SweepRegionUseCase(CommandUseCase):
    def _run(self) -> List[Path]:
        settings = self.config.sweep
        base = Parameters(n=self.config.n, gamma=self.config.gamma, alpha=0.0, beta=0.0)
        offsets = settings.beta_offsets
        samples = region_sweep(
            settings.alphas,
            lambda alpha: [alpha + offset for offset in offsets],
            base,
            self.config.grid,
            jobs=settings.jobs,
            tolerance=self.config.tolerances.newton,
        )

        failed = [sample for sample in samples if not sample.converged]
        if failed:
            logger.warning(f"{len(failed)} of {len(samples)} sweep points did not converge")
        logger.info(f"Swept {len(samples)} points")

        curve = contour(samples)
        return [
            self.writer.write_csv("sweep.csv", SWEEP_COLUMNS, (sample.to_row() for sample in samples)),
            self.writer.write_csv("contour.csv", ("alpha", "beta_star"), curve),
        ]
