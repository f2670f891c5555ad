"""
Value Objects - Domain Layer

Immutable problem descriptions: the parameter point, the t-grid, sampled
radial fields and the scalar constants derived from them.
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Optional

import numpy as np

from src.domain.errors import BoundaryLeak, ValidationError

ENDPOINT_SNAP = 1e-12
BOUNDARY_SMALLNESS = 1e-8


@dataclass(frozen=True)
class Parameters:
    """
    A point (n, γ, α, β) of the admissible set −2γ < α < (n−2γ)/2, α ≤ β ≤ α+γ.

    Construction rejects every violation with a ValidationError naming the
    broken inequality. β within 1e-12 of α+γ is snapped onto the Hardy endpoint
    so that p is exactly 2 there.
    """

    n: int
    gamma: float
    alpha: float
    beta: float

    def __post_init__(self) -> None:
        if int(self.n) != self.n or self.n < 2:
            raise ValidationError("n >= 2", f"dimension must be an integer >= 2, got {self.n}")
        object.__setattr__(self, "n", int(self.n))
        if not 0.0 < self.gamma < 1.0:
            raise ValidationError("0 < gamma < 1", f"gamma must lie in (0, 1), got {self.gamma}")
        if self.alpha <= -2.0 * self.gamma:
            raise ValidationError("alpha <= -2*gamma", f"alpha={self.alpha} violates -2*gamma < alpha")
        if self.alpha >= (self.n - 2.0 * self.gamma) / 2.0:
            raise ValidationError(
                "alpha >= (n-2*gamma)/2", f"alpha={self.alpha} violates alpha < (n-2*gamma)/2"
            )
        if self.beta < self.alpha:
            raise ValidationError("beta < alpha", f"beta={self.beta} violates alpha <= beta")
        if abs(self.beta - (self.alpha + self.gamma)) <= ENDPOINT_SNAP:
            object.__setattr__(self, "beta", self.alpha + self.gamma)
        elif self.beta > self.alpha + self.gamma:
            raise ValidationError("beta > alpha+gamma", f"beta={self.beta} violates beta <= alpha+gamma")

    @property
    def p(self) -> float:
        """Scaling-invariant exponent 2n/(n−2γ+2(β−α))."""
        if self.is_hardy_endpoint:
            return 2.0
        return 2.0 * self.n / (self.n - 2.0 * self.gamma + 2.0 * (self.beta - self.alpha))

    @property
    def nu(self) -> float:
        return (self.n - 2.0 * self.gamma) / 2.0 - self.alpha

    @property
    def critical_exponent(self) -> float:
        return 2.0 * self.n / (self.n - 2.0 * self.gamma)

    @property
    def is_hardy_endpoint(self) -> bool:
        return self.beta == self.alpha + self.gamma

    def with_weights(self, alpha: float, beta: float) -> "Parameters":
        return Parameters(n=self.n, gamma=self.gamma, alpha=alpha, beta=beta)


@dataclass(frozen=True)
class Grid:
    """Periodic lattice t_j = −T + jΔt, j = 0..N−1, with its FFT frequencies πk/T."""

    half_length: float = 20.0
    points: int = 2048

    def __post_init__(self) -> None:
        if self.half_length <= 0.0:
            raise ValidationError("T > 0", f"grid half-length must be positive, got {self.half_length}")
        n = self.points
        if n < 64 or n & (n - 1):
            raise ValidationError("N power of two >= 64", f"grid points must be a power of two >= 64, got {n}")

    @property
    def spacing(self) -> float:
        return 2.0 * self.half_length / self.points

    @cached_property
    def nodes(self) -> np.ndarray:
        t = -self.half_length + self.spacing * np.arange(self.points)
        t.setflags(write=False)
        return t

    @cached_property
    def frequencies(self) -> np.ndarray:
        """Full FFT ordering; the set is symmetric about 0 apart from the Nyquist entry."""
        xi = 2.0 * np.pi * np.fft.fftfreq(self.points, d=self.spacing)
        xi.setflags(write=False)
        return xi

    @cached_property
    def real_frequencies(self) -> np.ndarray:
        """Non-negative frequencies matching scipy.fft.rfft ordering."""
        xi = 2.0 * np.pi * np.fft.rfftfreq(self.points, d=self.spacing)
        xi.setflags(write=False)
        return xi

    @cached_property
    def reflection(self) -> np.ndarray:
        """Index map j → (N−j) mod N, i.e. t → −t."""
        index = (-np.arange(self.points)) % self.points
        index.setflags(write=False)
        return index

    def index_of(self, t: float) -> int:
        return int(round((t + self.half_length) / self.spacing)) % self.points


@dataclass(frozen=True, eq=False)
class RadialField:
    """Samples v(t_j) of a radial profile on a Grid."""

    grid: Grid
    values: np.ndarray

    def __post_init__(self) -> None:
        values = np.array(self.values, dtype=float)
        if values.shape != (self.grid.points,):
            raise ValueError(f"expected {self.grid.points} samples, got shape {values.shape}")
        if not np.all(np.isfinite(values)):
            raise ValueError("field values must be finite")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @property
    def peak(self) -> float:
        return float(np.max(np.abs(self.values)))

    @property
    def boundary_ratio(self) -> float:
        """max(|v(−T)|, |v(−T+Δt)|, |v(T−Δt)|) relative to max|v|."""
        peak = self.peak
        if peak == 0.0:
            return 0.0
        ends = np.abs(self.values[[0, 1, -1]])
        return float(np.max(ends) / peak)

    def require_small_boundary(self, threshold: float = BOUNDARY_SMALLNESS) -> None:
        ratio = self.boundary_ratio
        if ratio > threshold:
            raise BoundaryLeak(
                f"field is not small at the grid ends (ratio {ratio:.3e} > {threshold:.0e})",
                boundary_ratio=ratio,
            )

    def integral(self, power: float = 1.0) -> float:
        """∫|v|^power dt on the periodic grid (power=1 integrates v itself)."""
        if power == 1.0:
            return float(np.sum(self.values) * self.grid.spacing)
        return float(np.sum(np.abs(self.values) ** power) * self.grid.spacing)

    def inner(self, other: "RadialField | np.ndarray") -> float:
        other_values = other.values if isinstance(other, RadialField) else other
        return float(np.dot(self.values, other_values) * self.grid.spacing)

    def norm(self) -> float:
        return float(np.sqrt(self.inner(self)))

    def asymmetry(self) -> float:
        """‖v(t) − v(−t)‖∞ / max|v|."""
        peak = self.peak
        if peak == 0.0:
            return 0.0
        return float(np.max(np.abs(self.values - self.values[self.grid.reflection])) / peak)

    def with_values(self, values: np.ndarray) -> "RadialField":
        return RadialField(self.grid, values)


@dataclass(frozen=True)
class IndicialRoot:
    """Root z = τ + iσ of Θ^(0)(z) + C(α) = 0."""

    tau: float
    sigma: float
    index: int
    residual: float = 0.0


@dataclass(frozen=True)
class QuadratureEstimate:
    value: float
    abs_error: float


@dataclass(frozen=True)
class ProblemConstants:
    """Scalars of the cylindrical problem at one parameter point."""

    sigma_ng: float
    c_ng: float
    kappa: float
    C_alpha: float
    kappa_gamma: float
    kappa_error: float = 0.0

    @property
    def normalization(self) -> float:
        """Coefficient ςκ of the nonlinearity in the Euler-Lagrange equation."""
        return self.sigma_ng * self.kappa


@dataclass(frozen=True)
class BoundCurvePoint:
    """Value of the symmetry-breaking bound β = h(α) and whether it is informative."""

    h: float
    clamped: float
    inside: bool


@dataclass(frozen=True)
class DecayFit:
    rate: float
    amplitude: float
    r2: float


@dataclass(frozen=True)
class Tolerances:
    newton: float = 1e-10
    quadrature: float = 1e-9
    eig: float = 1e-9

    def as_dict(self) -> Dict[str, float]:
        return {"newton": self.newton, "quadrature": self.quadrature, "eig": self.eig}


@dataclass(frozen=True)
class SymbolSettings:
    xi_max: float = 50.0
    count: int = 501
    modes: int = 3


@dataclass(frozen=True)
class SweepSettings:
    alphas: tuple = ()
    beta_offsets: tuple = ()
    jobs: int = 1


@dataclass(frozen=True)
class ContinuationSettings:
    c0: float = 1.0
    p0: float = 4.0
    gamma0: float = 0.9
    gamma1: float = 1.0
    steps: int = 10


@dataclass(frozen=True)
class HardySettings:
    radii: tuple = (5.0, 10.0, 20.0, 40.0)
    grid: Grid = field(default_factory=lambda: Grid(half_length=60.0, points=4096))


@dataclass(frozen=True)
class RunConfig:
    """Fully validated configuration for one CLI command."""

    command: str
    n: int
    gamma: Optional[float]
    params: Optional[Parameters]
    grid: Grid
    tolerances: Tolerances
    output_dir: str
    symbol: SymbolSettings = field(default_factory=SymbolSettings)
    roots_count: int = 5
    spectrum_k: int = 6
    sweep: SweepSettings = field(default_factory=SweepSettings)
    continuation: ContinuationSettings = field(default_factory=ContinuationSettings)
    hardy: HardySettings = field(default_factory=HardySettings)
    solver_method: str = "newton"
