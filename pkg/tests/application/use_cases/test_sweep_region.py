"""
Unit tests for SweepRegion use case.
"""

import pytest

from src.application.use_cases import SweepRegionUseCase
from src.domain.entities import SWEEP_COLUMNS, RegionSample, Verdict


def should_write_header_only_files_for_an_empty_range(fake_writer, make_config):
    # Arrange
    config = make_config("sweep", "[sweep]\nalphas = []\n", gamma=0.5)

    # Act
    success = SweepRegionUseCase(config, fake_writer).execute()

    # Assert
    assert success is True
    assert fake_writer.headers["sweep.csv"] == list(SWEEP_COLUMNS)
    assert fake_writer.csv["sweep.csv"] == []
    assert fake_writer.headers["contour.csv"] == ["alpha", "beta_star"]
    assert fake_writer.csv["contour.csv"] == []


def should_write_samples_and_interpolated_contour(fake_writer, make_config, monkeypatch):
    # Arrange
    received = {}

    def fake_sweep(alphas, beta_rule, base, grid, jobs=1, tolerance=1e-10):
        received.update(alphas=list(alphas), betas=list(beta_rule(-0.5)), jobs=jobs)
        return [
            RegionSample(alpha=-0.5, beta=-0.5, p=3.0, lambda1=-1.0, verdict=Verdict.SYMMETRY_BROKEN, converged=True),
            RegionSample(alpha=-0.5, beta=-0.25, p=4.0, lambda1=3.0, verdict=Verdict.RADIAL_STABLE, converged=True),
            RegionSample(alpha=-0.5, beta=0.0, p=6.0, error="NewtonStall: stalled"),
        ]

    monkeypatch.setattr("src.application.use_cases.sweep_region.region_sweep", fake_sweep)
    source = "[sweep]\nalphas = [-0.5]\nbeta_offsets = [0.0, 0.25, 0.49]\njobs = 2\n"
    config = make_config("sweep", source, gamma=0.5)

    # Act
    success = SweepRegionUseCase(config, fake_writer).execute()

    # Assert
    assert success is True
    assert received["alphas"] == [-0.5]
    assert received["betas"] == pytest.approx([-0.5, -0.25, -0.01])
    assert received["jobs"] == 2
    rows = fake_writer.csv["sweep.csv"]
    assert [row[6] for row in rows] == ["SymmetryBroken", "RadialStable", ""]
    assert rows[2][9] is False
    assert fake_writer.csv["contour.csv"] == [[-0.5, -0.4375]]
