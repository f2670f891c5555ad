"""
Use Cases - Application Layer

One use case per CLI subcommand; each exposes `execute()` returning success.
"""

from src.application.use_cases.analyze_spectrum import AnalyzeSpectrumUseCase
from src.application.use_cases.base import CommandUseCase
from src.application.use_cases.check_hardy_limit import CheckHardyLimitUseCase
from src.application.use_cases.compute_constants import ComputeConstantsUseCase
from src.application.use_cases.continue_branch import ContinueBranchUseCase
from src.application.use_cases.find_indicial_roots import FindIndicialRootsUseCase
from src.application.use_cases.run_validation import RunValidationUseCase
from src.application.use_cases.solve_ground_state import SolveGroundStateUseCase
from src.application.use_cases.sweep_region import SweepRegionUseCase
from src.application.use_cases.tabulate_symbol import TabulateSymbolUseCase

__all__ = [
    "AnalyzeSpectrumUseCase",
    "CheckHardyLimitUseCase",
    "CommandUseCase",
    "ComputeConstantsUseCase",
    "ContinueBranchUseCase",
    "FindIndicialRootsUseCase",
    "RunValidationUseCase",
    "SolveGroundStateUseCase",
    "SweepRegionUseCase",
    "TabulateSymbolUseCase",
]
