"""
Continue Branch Use Case

Follows the fixed-exponent solution branch in γ and writes one profile per
step (branch_000.csv, ...) plus the branch summary branch.csv.
"""

import logging
from pathlib import Path
from typing import List

from src.application.use_cases.base import CommandUseCase
from src.infrastructure.solver import continuation_gamma

logger = logging.getLogger(__name__)

BRANCH_COLUMNS = ("gamma", "kappa_gamma", "residual", "l2", "lp", "quadratic", "soliton_distance")


class ContinueBranchUseCase(CommandUseCase):
    def _run(self) -> List[Path]:
        settings = self.config.continuation
        points = continuation_gamma(
            settings.c0,
            settings.p0,
            settings.gamma0,
            settings.gamma1,
            settings.steps,
            self.config.grid,
            n=self.config.n,
            tolerance=self.config.tolerances.newton,
        )
        endpoint = points[-1]
        if endpoint.soliton_distance is not None:
            logger.info(f"Distance to the closed-form soliton at gamma=1: {endpoint.soliton_distance:.3e}")

        written = []
        for index, point in enumerate(points):
            rows = zip(point.field.grid.nodes, point.field.values)
            written.append(self.writer.write_csv(f"branch_{index:03d}.csv", ("t", "v"), rows))
        summary = [[point.to_record()[column] for column in BRANCH_COLUMNS] for point in points]
        written.append(self.writer.write_csv("branch.csv", BRANCH_COLUMNS, summary))
        return written
