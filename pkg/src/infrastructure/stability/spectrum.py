"""
Low Spectrum - Infrastructure Layer

Lowest eigenpairs of L̄^(m). When the ground state is even the operator
commutes with t ↦ −t and the dense matrix splits into an even and an odd
block, which are diagonalized separately and tag each eigenfunction with
its parity. The translation mode v̄_t lives in the odd block of mode 0.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Sequence, Tuple

import numpy as np
from scipy.linalg import LinAlgError, eigh

from src.domain.entities import (
    ZERO_EIGENVALUE_BAND,
    Parity,
    SpectrumReport,
    count_negative,
    negative_threshold,
)
from src.domain.errors import EigDivergence
from src.domain.value_objects import Grid
from src.infrastructure.spectral import spectral_derivative
from src.infrastructure.stability.linearized import LinearizedOperator

logger = logging.getLogger(__name__)

MAX_EIGENVALUES = 10
SYMMETRY_THRESHOLD = 1e-10
SIGN_FLOOR = 1e-10
TRANSLATION_ALIGNMENT = 0.99


@dataclass(frozen=True)
class ParitySector:
    """Orthonormal basis of one parity class, stored as index pairs and weights."""

    parity: Parity
    points: int
    indices: np.ndarray
    mirrors: np.ndarray
    weights: np.ndarray

    @property
    def size(self) -> int:
        return len(self.indices)

    def restrict(self, matrix: np.ndarray) -> np.ndarray:
        """Bᵀ A B for the sector basis B."""
        sign = 1.0 if self.parity is Parity.EVEN else -1.0
        columns = (matrix[:, self.indices] + sign * matrix[:, self.mirrors]) * self.weights
        return (columns[self.indices, :] + sign * columns[self.mirrors, :]) * self.weights[:, None]

    def embed(self, coefficients: np.ndarray) -> np.ndarray:
        """B y on the full grid, column by column."""
        sign = 1.0 if self.parity is Parity.EVEN else -1.0
        scaled = coefficients * self.weights[:, None]
        full = np.zeros((self.points, coefficients.shape[1]))
        full[self.indices] += scaled
        full[self.mirrors] += sign * scaled
        return full


@lru_cache(maxsize=8)
def parity_sectors(grid: Grid) -> Tuple[ParitySector, ParitySector]:
    """
    Even and odd sectors of the reflection j ↦ N−j.

    The nodes j = 0 (t = −T) and j = N/2 (t = 0) are fixed, so the even
    sector has N/2+1 basis vectors and the odd sector N/2−1.
    """
    half = grid.points // 2
    pairs = np.arange(1, half)
    even_indices = np.concatenate(([0], pairs, [half]))
    even = ParitySector(
        parity=Parity.EVEN,
        points=grid.points,
        indices=even_indices,
        mirrors=grid.reflection[even_indices],
        weights=np.where(np.isin(even_indices, (0, half)), 0.5, np.sqrt(0.5)),
    )
    odd = ParitySector(
        parity=Parity.ODD,
        points=grid.points,
        indices=pairs,
        mirrors=grid.reflection[pairs],
        weights=np.full(len(pairs), np.sqrt(0.5)),
    )
    return even, odd


def _sector_eigs(matrix: np.ndarray, sector: ParitySector, count: int) -> Tuple[np.ndarray, np.ndarray]:
    block = sector.restrict(matrix)
    count = min(count, sector.size)
    try:
        values, vectors = eigh(block, subset_by_index=[0, count - 1])
    except LinAlgError as error:
        raise EigDivergence(f"{sector.parity.value} sector eigensolve failed: {error}") from error
    return values, sector.embed(vectors)


def _full_eigs(matrix: np.ndarray, count: int) -> Tuple[np.ndarray, np.ndarray, List[Parity]]:
    try:
        values, vectors = eigh(matrix, subset_by_index=[0, count - 1])
    except LinAlgError as error:
        raise EigDivergence(f"eigensolve failed: {error}") from error
    return values, vectors, [Parity.NONE] * count


def sector_spectrum(op: LinearizedOperator, k: int) -> Tuple[np.ndarray, np.ndarray, List[Parity]]:
    """
    The k lowest eigenpairs, merged across parity sectors when v̄ is even.

    Returns:
        (ascending eigenvalues, unit eigenvectors as columns, parity tags)
    """
    matrix = op.matrix
    if op.base_field.asymmetry() > SYMMETRY_THRESHOLD:
        logger.debug("ground state is not exactly even; diagonalizing the full matrix")
        return _full_eigs(matrix, k)
    values, vectors, tags = [], [], []
    for sector in parity_sectors(op.grid):
        sector_values, sector_vectors = _sector_eigs(matrix, sector, k)
        values.extend(sector_values)
        vectors.extend(sector_vectors.T)
        tags.extend([sector.parity] * len(sector_values))
    order = np.argsort(values, kind="stable")[:k]
    return (
        np.asarray(values)[order],
        np.asarray(vectors)[order].T,
        [tags[i] for i in order],
    )


def _check_variational(op: LinearizedOperator, values: np.ndarray, vectors: np.ndarray, tolerance: float) -> None:
    for value, vector in zip(values, vectors.T):
        quotient = op.rayleigh(vector)
        if abs(quotient - value) > tolerance * max(1.0, abs(value)):
            raise EigDivergence(
                f"Rayleigh quotient {quotient:.12g} disagrees with eigenvalue {value:.12g}",
                eigenvalue=float(value),
                quotient=quotient,
            )


def _sign_definite(vector: np.ndarray) -> Tuple[bool, np.ndarray]:
    oriented = vector if vector.sum() >= 0.0 else -vector
    return bool(oriented.min() > -SIGN_FLOOR * np.abs(oriented).max()), oriented


def _cosine(a: np.ndarray, b: np.ndarray) -> float:
    return float(abs(np.dot(a, b)) / (np.linalg.norm(a) * np.linalg.norm(b)))


def lowest_eigs(op: LinearizedOperator, k: int, tolerance: float = 1e-9) -> SpectrumReport:
    """
    Lowest k eigenvalues of L̄^(m) with eigenfunction diagnostics.

    For mode 0 the report also carries the kernel residual ‖L̄v̄_t‖/‖v̄_t‖ and
    the alignment of the lowest-magnitude odd eigenfunction with v̄_t.

    Args:
        op: Assembled linearized operator
        k: Number of eigenvalues, at most 10
        tolerance: Accepted gap between each eigenvalue and its Rayleigh quotient;
            also the least relative width of the zero band left out of the Morse count

    Returns:
        SpectrumReport for the mode

    Raises:
        EigDivergence: If the eigensolver fails or its output is inconsistent
    """
    if not 1 <= k <= MAX_EIGENVALUES:
        raise ValueError(f"k must lie in [1, {MAX_EIGENVALUES}], got {k}")
    values, vectors, tags = sector_spectrum(op, k)
    _check_variational(op, values, vectors, tolerance)

    sign_definite, ground = _sign_definite(vectors[:, 0])
    vectors[:, 0] = ground
    band = max(tolerance, ZERO_EIGENVALUE_BAND)
    negatives = count_negative(values, band)
    if negatives == len(values):
        logger.warning(f"all {k} computed eigenvalues of mode {op.mode} are negative; the count may be truncated")

    kernel_residual = None
    alignment = None
    if op.mode == 0:
        derivative = spectral_derivative(op.base_field.values, op.grid)
        kernel_residual = float(np.linalg.norm(op(derivative)) / np.linalg.norm(derivative))
        odd = [i for i, tag in enumerate(tags) if tag is not Parity.EVEN]
        if odd:
            nearest = min(odd, key=lambda i: abs(values[i]))
            alignment = _cosine(vectors[:, nearest], derivative)
            if alignment >= TRANSLATION_ALIGNMENT and values[nearest] < negative_threshold(values, band):
                # translation mode pushed below the band by discretization error
                negatives -= 1

    return SpectrumReport(
        mode=op.mode,
        eigenvalues=[float(value) for value in values],
        ground_eigenfunction_sign_definite=sign_definite,
        parity_tags=tags,
        kernel_residual=kernel_residual,
        morse_index=negatives * op.multiplicity,
        spectral_gap=float(values[1] - values[0]) if len(values) > 1 else 0.0,
        translation_alignment=alignment,
        eigenvectors=vectors,
    )


def mode_ordering(reports: Sequence[SpectrumReport]) -> List[int]:
    """Modes m whose lowest eigenvalue falls below that of mode m−1."""
    ordered = sorted(reports, key=lambda report: report.mode)
    violations = [
        current.mode
        for previous, current in zip(ordered, ordered[1:])
        if current.lowest < previous.lowest
    ]
    for mode in violations:
        logger.warning(f"lowest eigenvalue of mode {mode} lies below that of mode {mode - 1}")
    return violations
