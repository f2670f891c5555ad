"""
Analyze Spectrum Use Case

Linearizes around the ground state and writes spectrum.json: the lowest
eigenvalues of modes 0..2, the Morse count, the mode-1 symmetry verdict with
its Rayleigh bound, and the bound curve h(α) with M = |I_p|.
"""

import logging
from pathlib import Path
from typing import Any, Dict, List, Optional

from src.application.use_cases.base import CommandUseCase, parameter_record
from src.domain.entities import MorseCount
from src.domain.value_objects import BoundCurvePoint
from src.infrastructure.constants import h_alpha, problem_constants
from src.infrastructure.solver import solve_ground_state
from src.infrastructure.stability import (
    assemble_linearized,
    lambda1_sign,
    lowest_eigs,
    mode_ordering,
    morse_count,
)

logger = logging.getLogger(__name__)

REPORTED_MODES = (0, 1, 2)


def morse_record(count: MorseCount) -> Dict[str, Any]:
    return {
        "index": count.index,
        "negative_by_mode": count.negative_by_mode,
        "higher_mode_certificate": count.higher_mode_certificate,
        "certified": count.certified,
    }


def bound_record(bound: Optional[BoundCurvePoint]) -> Optional[Dict[str, Any]]:
    if bound is None:
        return None
    return {"h": bound.h, "clamped": bound.clamped, "inside": bound.inside}


class AnalyzeSpectrumUseCase(CommandUseCase):
    def _run(self) -> List[Path]:
        params, tolerances, k = self.config.params, self.config.tolerances, self.config.spectrum_k
        constants = problem_constants(params, tolerances.quadrature)
        solve = solve_ground_state(params, self.config.grid, tolerance=tolerances.newton, constants=constants)

        reports = [
            lowest_eigs(assemble_linearized(m, solve, params, constants), k, tolerances.eig) for m in REPORTED_MODES
        ]
        violations = mode_ordering(reports)
        count = morse_count(solve, params, k, constants)
        decision = lambda1_sign(solve, params, constants=constants, eig_tolerance=tolerances.eig)
        logger.info(f"lambda1 = {decision.lambda1:.10g} ({decision.verdict.value}), Morse index {count.index}")

        M = abs(decision.rayleigh_quotient_ip)
        bound = h_alpha(params, M, tolerances.quadrature) if M > 0.0 else None

        record = parameter_record(params)
        record.update(
            {
                "modes": [report.to_record() for report in reports],
                "mode_ordering_violations": violations,
                "morse": morse_record(count),
                "symmetry": decision.to_record(),
                "h_alpha": bound_record(bound),
                "solve": solve.to_record(),
            }
        )
        return [self.writer.write_json("spectrum.json", record)]
