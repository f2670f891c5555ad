"""
Unit tests for domain entities.

Tests the result records and the derived properties used by the reports.
"""

import math

import numpy as np
import pytest

from src.domain.entities import (
    SWEEP_COLUMNS,
    HardyReport,
    HardySample,
    MorseCount,
    Parity,
    RegionSample,
    SolveResult,
    SpectrumReport,
    SymmetryDecision,
    Verdict,
    count_negative,
    negative_threshold,
)
from src.domain.value_objects import Grid, Parameters, RadialField


@pytest.fixture
def grid():
    return Grid(half_length=10.0, points=64)


def should_report_positivity_and_grid_in_solve_record(grid):
    """Test SolveResult properties and its record."""
    # Arrange
    field = RadialField(grid, np.exp(-np.abs(grid.nodes)))
    result = SolveResult(
        field=field, residual=1e-11, energy=5.0, normalization=0.6, iterations=7, recentering_shift=0.0
    )

    # Act
    record = result.to_record()

    # Assert
    assert result.is_positive
    assert record["T"] == 10.0
    assert record["N"] == 64
    assert list(record)[0] == "residual"


def should_count_negative_eigenvalues():
    """Test SpectrumReport helpers."""
    # Arrange
    report = SpectrumReport(
        mode=1,
        eigenvalues=[-0.5, 0.2, 0.9],
        ground_eigenfunction_sign_definite=True,
        parity_tags=[Parity.EVEN, Parity.ODD, Parity.EVEN],
        kernel_residual=None,
        morse_index=3,
    )

    # Act
    record = report.to_record()

    # Assert
    assert report.lowest == -0.5
    assert report.negative_count == 1
    assert record["parity_tags"] == ["even", "odd", "even"]
    assert "eigenvectors" not in record


def should_leave_roundoff_zero_out_of_the_negative_count():
    # Arrange
    eigenvalues = [-0.158, -3.17e-15, 0.119, 0.43]

    # Act
    count = count_negative(eigenvalues)
    threshold = negative_threshold(eigenvalues)

    # Assert
    assert count == 1
    assert -0.158 < threshold < -3.17e-15
    assert count_negative([-2e-8, 0.5]) == 1
    assert negative_threshold([100.0, -3.0]) == pytest.approx(-1e-6)


def should_serialize_verdict_values():
    """Test SymmetryDecision record."""
    # Act
    record = SymmetryDecision(lambda1=-0.1, rayleigh_bound=0.2, verdict=Verdict.SYMMETRY_BROKEN).to_record()

    # Assert
    assert record == {"lambda1": -0.1, "rayleigh_bound": 0.2, "verdict": "SymmetryBroken", "I_p": 0.0}


def should_certify_morse_count_with_non_negative_certificate():
    """Test MorseCount.certified."""
    # Act & Assert
    assert MorseCount(index=1, negative_by_mode={0: 1, 1: 0}, higher_mode_certificate=0.0).certified
    assert not MorseCount(index=1, negative_by_mode={0: 1}, higher_mode_certificate=-1e-3).certified


def should_fill_failed_region_samples_with_nan():
    """Test RegionSample defaults and row layout."""
    # Act
    sample = RegionSample(alpha=-0.5, beta=-0.4, p=3.5, error="NewtonStall: stalled")
    row = sample.to_row()

    # Assert
    assert len(row) == len(SWEEP_COLUMNS)
    assert math.isnan(row[SWEEP_COLUMNS.index("lambda1")])
    assert row[SWEEP_COLUMNS.index("verdict")] == ""
    assert row[-1] is False


def should_detect_monotone_hardy_family():
    """Test HardyReport monotonicity and relative gap."""
    # Arrange
    params = Parameters(n=3, gamma=0.5, alpha=-0.5, beta=0.0)
    samples = [HardySample(5.0, 2.2), HardySample(10.0, 2.1), HardySample(20.0, 2.05)]

    # Act
    report = HardyReport(params=params, samples=samples, two_kappa=2.0, extrapolated=2.01)

    # Assert
    assert report.monotone
    assert report.relative_gap == pytest.approx(0.005)
    assert report.to_record()["monotone"] is True
