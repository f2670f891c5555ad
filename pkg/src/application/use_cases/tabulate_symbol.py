"""
Tabulate Symbol Use Case

Samples the mode symbols Θ^(m)(ξ) on [0, xi_max] and writes symbol.csv. The
monotonicity and mode-ordering diagnostics are logged as warnings.
"""

import logging
from pathlib import Path
from typing import List

import numpy as np

from src.application.use_cases.base import CommandUseCase
from src.infrastructure.spectral import mode_ordering_violations, symbol_monotonicity, symbol_values

logger = logging.getLogger(__name__)


class TabulateSymbolUseCase(CommandUseCase):
    def _run(self) -> List[Path]:
        n, gamma = self.config.n, self.config.gamma
        settings = self.config.symbol
        xi = np.linspace(0.0, settings.xi_max, settings.count)

        columns = [symbol_values(n, gamma, m, xi) for m in range(settings.modes)]
        irregular = [m for m in range(settings.modes) if not symbol_monotonicity(n, gamma, m, xi)]
        violations = mode_ordering_violations(n, gamma, settings.modes, xi)
        if irregular or violations:
            logger.warning(f"Symbol diagnostics: non-monotone modes {irregular}, ordering violations {violations}")
        else:
            logger.info(f"Symbols of modes 0..{settings.modes - 1} are monotone and ordered")

        header = ["xi"] + [f"theta_{m}" for m in range(settings.modes)]
        rows = ([x, *(column[j] for column in columns)] for j, x in enumerate(xi))
        return [self.writer.write_csv("symbol.csv", header, rows)]
