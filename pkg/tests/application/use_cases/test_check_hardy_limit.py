"""
Unit tests for CheckHardyLimit use case.
"""

import pytest

from src.application.use_cases import CheckHardyLimitUseCase


def should_approach_twice_kappa_from_above(fake_writer, make_config):
    # Arrange
    source = "[hardy]\nR = [4.0, 8.0]\nT = 20.0\nN = 1024\n"
    config = make_config("hardy-check", source, gamma=0.5, alpha=-0.5)

    # Act
    success = CheckHardyLimitUseCase(config, fake_writer).execute()

    # Assert
    assert success is True
    rows = fake_writer.csv["hardy.csv"]
    assert [row[0] for row in rows] == [4.0, 8.0]
    assert all(row[2] >= 1.0 - 1e-10 for row in rows)
    assert rows[1][1] < rows[0][1]
    record = fake_writer.json["hardy.json"]
    assert record["monotone"] is True
    assert record["alpha"] == -0.5
    assert record["two_kappa"] == pytest.approx(rows[0][1] / rows[0][2], rel=1e-14)
