"""
Unit tests for SolveGroundState use case.
"""

import numpy as np
import pytest

from src.application.use_cases import SolveGroundStateUseCase
from src.domain.entities import SolveResult
from src.infrastructure.constants import bubble_energy
from src.infrastructure.spectral import bubble_profile, bubble_scale


def should_write_bubble_profile_and_diagnostics(fake_writer, make_config):
    # Arrange
    config = make_config("solve", "[grid]\nN = 512\n", gamma=0.5, alpha=0.0, beta=0.0)

    # Act
    success = SolveGroundStateUseCase(config, fake_writer).execute()

    # Assert
    assert success is True
    rows = np.array(fake_writer.csv["solution.csv"], dtype=float)
    assert rows.shape == (512, 2)
    assert fake_writer.headers["solution.csv"] == ["t", "v"]
    record = fake_writer.json["solution.json"]
    assert record["energy"] == pytest.approx(bubble_energy(3, 0.5), rel=1e-6)
    assert record["sigma0"] == pytest.approx(1.0, abs=1e-8)
    assert record["decay_fit"] == pytest.approx(1.0, rel=1e-2)
    assert record["N"] == 512
    assert record["method"] == "newton"


def should_write_error_report_when_solver_fails(fake_writer, make_config, monkeypatch):
    # Arrange
    from src.domain.errors import NewtonStall

    def stalled(*args, **kwargs):
        raise NewtonStall("damped Newton stalled", residual=1e-3)

    monkeypatch.setattr("src.application.use_cases.solve_ground_state.solve_ground_state", stalled)
    config = make_config("solve", gamma=0.5, alpha=0.3, beta=0.5)

    # Act
    success = SolveGroundStateUseCase(config, fake_writer).execute()

    # Assert
    assert success is False
    assert "solution.csv" not in fake_writer.csv
    report = fake_writer.json["error.json"]
    assert report["kind"] == "NewtonStall"
    assert report["details"]["residual"] == 1e-3


def should_run_the_gradient_flow_when_configured(fake_writer, make_config, monkeypatch):
    # Arrange
    config = make_config("solve", '[grid]\nN = 512\n[solver]\nmethod = "flow"\n', gamma=0.5, alpha=0.0, beta=0.0)
    bubble = bubble_profile(config.grid, 3, 0.5)
    field = bubble.with_values(bubble_scale(3, 0.5) * bubble.values)
    calls = []

    def flow(params, grid, constants=None):
        calls.append(params)
        return SolveResult(
            field=field,
            residual=1e-7,
            energy=bubble_energy(3, 0.5),
            normalization=1.0,
            iterations=900,
            recentering_shift=0.0,
        )

    def newton(*args, **kwargs):
        raise AssertionError("newton solver must not run")

    monkeypatch.setattr("src.application.use_cases.solve_ground_state.flow_ground_state", flow)
    monkeypatch.setattr("src.application.use_cases.solve_ground_state.solve_ground_state", newton)

    # Act
    success = SolveGroundStateUseCase(config, fake_writer).execute()

    # Assert
    assert success is True
    assert len(calls) == 1
    record = fake_writer.json["solution.json"]
    assert record["method"] == "flow"
    assert record["iterations"] == 900
    assert record["decay_fit"] == pytest.approx(1.0, rel=1e-2)
