"""
Find Indicial Roots Use Case

Writes the first roots of Θ^(0)(z) + C(α) = 0 to roots.csv.
"""

import logging
from pathlib import Path
from typing import List

from src.application.use_cases.base import CommandUseCase
from src.infrastructure.spectral import indicial_roots

logger = logging.getLogger(__name__)

ROOT_COLUMNS = ("j", "tau", "sigma", "residual")


class FindIndicialRootsUseCase(CommandUseCase):
    def _run(self) -> List[Path]:
        roots = indicial_roots(self.config.params, self.config.roots_count, tolerance=self.config.tolerances.quadrature)
        logger.info(f"First decay rate sigma_0 = {roots[0].sigma:.12g}")
        rows = [(root.index, root.tau, root.sigma, root.residual) for root in roots]
        return [self.writer.write_csv("roots.csv", ROOT_COLUMNS, rows)]
