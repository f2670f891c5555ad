"""
Entities - Domain Layer

Results produced by the solvers and the stability analysis. Each result knows
how to flatten itself into an ordered record for CSV/JSON emission.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from src.domain.value_objects import Parameters, RadialField


class Verdict(str, Enum):
    RADIAL_STABLE = "RadialStable"
    SYMMETRY_BROKEN = "SymmetryBroken"
    MARGINAL = "Marginal"


class Parity(str, Enum):
    EVEN = "even"
    ODD = "odd"
    NONE = "none"


# relative width of the band around zero that holds the translation eigenvalue
ZERO_EIGENVALUE_BAND = 1e-8


def negative_threshold(eigenvalues: Sequence[float], band: float = ZERO_EIGENVALUE_BAND) -> float:
    """−band·max(1, max|λ|): eigenvalues at or above it count as zero."""
    values = np.asarray(eigenvalues, dtype=float)
    scale = max(1.0, float(np.max(np.abs(values)))) if values.size else 1.0
    return -band * scale


def count_negative(eigenvalues: Sequence[float], band: float = ZERO_EIGENVALUE_BAND) -> int:
    """Eigenvalues below the negative threshold; roundoff around a zero mode is not counted."""
    values = np.asarray(eigenvalues, dtype=float)
    return int(np.sum(values < negative_threshold(values, band)))


@dataclass(frozen=True)
class SolveResult:
    """A converged ground state of P^(0)v + C(α)v = ςκ v^{p−1}."""

    field: RadialField
    residual: float
    energy: float
    normalization: float
    iterations: int
    recentering_shift: float
    asymmetry: float = 0.0
    boundary_ratio: float = 0.0

    @property
    def is_positive(self) -> bool:
        return bool(self.field.values.min() > 0.0)

    def to_record(self) -> Dict[str, Any]:
        return {
            "residual": self.residual,
            "energy": self.energy,
            "normalization": self.normalization,
            "iterations": self.iterations,
            "recentering_shift": self.recentering_shift,
            "asymmetry": self.asymmetry,
            "boundary_ratio": self.boundary_ratio,
            "T": self.field.grid.half_length,
            "N": self.field.grid.points,
        }


@dataclass(frozen=True)
class BranchPoint:
    """A solution of P_γ^(0)v + c0·v = v^{p0−1} at one step of a γ-continuation."""

    gamma: float
    field: RadialField
    residual: float
    kappa_gamma: float = 0.0
    l2: float = 0.0
    lp: float = 0.0
    quadratic: float = 0.0
    soliton_distance: Optional[float] = None

    def to_record(self) -> Dict[str, Any]:
        return {
            "gamma": self.gamma,
            "kappa_gamma": self.kappa_gamma,
            "residual": self.residual,
            "l2": self.l2,
            "lp": self.lp,
            "quadratic": self.quadratic,
            "soliton_distance": self.soliton_distance,
        }


@dataclass(frozen=True)
class SpectrumReport:
    """Lowest eigenvalues of one mode of the linearized operator."""

    mode: int
    eigenvalues: List[float]
    ground_eigenfunction_sign_definite: bool
    parity_tags: List[Parity]
    kernel_residual: Optional[float]
    morse_index: int
    spectral_gap: float = 0.0
    translation_alignment: Optional[float] = None
    eigenvectors: Any = field(default=None, repr=False, compare=False)

    @property
    def lowest(self) -> float:
        return self.eigenvalues[0]

    @property
    def negative_count(self) -> int:
        return count_negative(self.eigenvalues)

    def to_record(self) -> Dict[str, Any]:
        return {
            "mode": self.mode,
            "eigenvalues": list(self.eigenvalues),
            "ground_eigenfunction_sign_definite": self.ground_eigenfunction_sign_definite,
            "parity_tags": [tag.value for tag in self.parity_tags],
            "kernel_residual": self.kernel_residual,
            "morse_index": self.morse_index,
            "spectral_gap": self.spectral_gap,
            "translation_alignment": self.translation_alignment,
        }


@dataclass(frozen=True)
class SymmetryDecision:
    lambda1: float
    rayleigh_bound: float
    verdict: Verdict
    rayleigh_quotient_ip: float = 0.0

    def to_record(self) -> Dict[str, Any]:
        return {
            "lambda1": self.lambda1,
            "rayleigh_bound": self.rayleigh_bound,
            "verdict": self.verdict.value,
            "I_p": self.rayleigh_quotient_ip,
        }


@dataclass(frozen=True)
class MorseCount:
    """Negative eigenvalues per mode, weighted by the spherical-harmonic multiplicity."""

    index: int
    negative_by_mode: Dict[int, int]
    higher_mode_certificate: float

    @property
    def certified(self) -> bool:
        return self.higher_mode_certificate >= 0.0


SWEEP_COLUMNS = ("alpha", "beta", "p", "R", "lambda0", "lambda1", "verdict", "sigma0", "decay_fit", "converged")


@dataclass(frozen=True)
class RegionSample:
    """One (α, β) point of a symmetry sweep; failed solves keep NaN fields."""

    alpha: float
    beta: float
    p: float
    R: float = float("nan")
    lambda0: float = float("nan")
    lambda1: float = float("nan")
    verdict: Optional[Verdict] = None
    sigma0: float = float("nan")
    decay_fit: float = float("nan")
    converged: bool = False
    error: Optional[str] = None
    rayleigh_bound: float = float("nan")

    def to_row(self) -> List[Any]:
        return [
            self.alpha,
            self.beta,
            self.p,
            self.R,
            self.lambda0,
            self.lambda1,
            self.verdict.value if self.verdict else "",
            self.sigma0,
            self.decay_fit,
            self.converged,
        ]


@dataclass(frozen=True)
class HardySample:
    radius: float
    value: float


@dataclass(frozen=True)
class HardyReport:
    params: Parameters
    samples: List[HardySample]
    two_kappa: float
    extrapolated: float

    @property
    def monotone(self) -> bool:
        values = [sample.value for sample in self.samples]
        return all(b < a for a, b in zip(values, values[1:]))

    @property
    def relative_gap(self) -> float:
        return abs(self.extrapolated - self.two_kappa) / self.two_kappa

    def to_record(self) -> Dict[str, Any]:
        return {
            "alpha": self.params.alpha,
            "gamma": self.params.gamma,
            "two_kappa": self.two_kappa,
            "extrapolated": self.extrapolated,
            "relative_gap": self.relative_gap,
            "monotone": self.monotone,
        }


@dataclass(frozen=True)
class ValidationCheck:
    """One row of the acceptance table printed by `validate`."""

    name: str
    passed: bool
    detail: str
    seconds: float = 0.0
