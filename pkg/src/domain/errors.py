"""
Errors - Domain Layer

Exception hierarchy shared by every layer, plus the structured ErrorReport
written by the CLI when a computation fails.
"""

from dataclasses import dataclass, field
from datetime import datetime
from typing import Any, Dict, Optional


@dataclass
class ErrorReport:
    """Structured description of a failed run, serialized as error.json."""

    kind: str  # "NewtonStall", "ValidationError", ...
    message: str
    details: Dict[str, Any] = field(default_factory=dict)
    line_number: Optional[int] = None
    column_number: Optional[int] = None
    timestamp: str = field(default_factory=lambda: datetime.now().isoformat())

    @property
    def short_message(self) -> str:
        """Returns a shortened version of the error message."""
        max_length = 200
        if len(self.message) <= max_length:
            return self.message
        return self.message[:max_length] + "..."

    @property
    def location_info(self) -> Optional[str]:
        """Returns formatted location information if available."""
        if self.line_number is not None and self.column_number is not None:
            return f"Line {self.line_number}, Column {self.column_number}"
        elif self.line_number is not None:
            return f"Line {self.line_number}"
        return None

    def to_record(self) -> Dict[str, Any]:
        return {
            "kind": self.kind,
            "message": self.message,
            "location": self.location_info,
            "details": self.details,
            "timestamp": self.timestamp,
        }


class CknError(Exception):
    """Base class for every failure raised by this package."""

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.message = message
        self.details = details

    @property
    def kind(self) -> str:
        return type(self).__name__

    def to_report(self) -> ErrorReport:
        return ErrorReport(kind=self.kind, message=self.message, details=_plain(self.details))


# Special functions


class SpecialFunctionError(CknError):
    pass


class PoleError(SpecialFunctionError):
    """Gamma evaluated at (or within 1e-12 of) a non-positive integer."""


class ParameterPole(SpecialFunctionError):
    """Hypergeometric lower parameter c is a non-positive integer."""


class NonConvergence(SpecialFunctionError):
    """A series did not meet its tolerance inside the iteration budget."""


class GammaOverflow(SpecialFunctionError):
    """log Γ is not a finite float at the argument."""


# Quadrature


class QuadratureError(CknError):
    pass


class DivergentIntegral(QuadratureError):
    pass


class QuadratureBudgetExceeded(QuadratureError):
    pass


# Spectral discretization


class SpectralError(CknError):
    pass


class BoundaryLeak(SpectralError):
    """Field is not small at the grid ends, so periodization is invalid."""


class RootNotBracketed(SpectralError):
    pass


class NewtonDivergence(SpectralError):
    """Complex Newton for an indicial root failed; carries the last iterate."""


class NonPositiveField(SpectralError):
    pass


class UndecayedTail(SpectralError):
    """The fit window sees no exponential decay to measure."""


# Ground-state solvers


class SolverError(CknError):
    pass


class ZeroField(SolverError):
    pass


class NewtonStall(SolverError):
    """Damped Newton could not decrease the residual; carries the best iterate."""

    def __init__(self, message: str, best_values: Any = None, **details: Any):
        super().__init__(message, **details)
        self.best_values = best_values


class PositivityLoss(SolverError):
    pass


class FlowStall(SolverError):
    pass


class StepFailure(SolverError):
    pass


# Stability


class StabilityError(CknError):
    pass


class EigDivergence(StabilityError):
    pass


# Configuration and output


class ConfigError(CknError):
    pass


class ParseError(ConfigError):
    """Malformed configuration document."""

    def __init__(self, message: str, line_number: Optional[int] = None, column_number: Optional[int] = None):
        super().__init__(message)
        self.line_number = line_number
        self.column_number = column_number

    @property
    def location_info(self) -> Optional[str]:
        """Returns formatted location information if available."""
        if self.line_number is not None and self.column_number is not None:
            return f"Line {self.line_number}, Column {self.column_number}"
        elif self.line_number is not None:
            return f"Line {self.line_number}"
        return None

    def to_report(self) -> ErrorReport:
        return ErrorReport(
            kind=self.kind,
            message=self.message,
            line_number=self.line_number,
            column_number=self.column_number,
        )


class ValidationError(ConfigError):
    """A configuration or parameter constraint is violated; the message names it."""

    def __init__(self, constraint: str, message: Optional[str] = None):
        super().__init__(message or f"constraint violated: {constraint}", constraint=constraint)
        self.constraint = constraint


class EmitError(CknError):
    """Writing an output file failed."""


def _plain(details: Dict[str, Any]) -> Dict[str, Any]:
    plain: Dict[str, Any] = {}
    for key, value in details.items():
        if isinstance(value, (str, int, float, bool)) or value is None:
            plain[key] = value
        else:
            plain[key] = repr(value)
    return plain
