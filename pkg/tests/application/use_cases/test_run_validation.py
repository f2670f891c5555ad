"""
Unit tests for RunValidation use case.
"""

import pytest

from src.application.use_cases import RunValidationUseCase
from src.application.use_cases.run_validation import lopsided_start
from src.domain.errors import NonConvergence
from src.domain.value_objects import Grid, RadialField
from src.infrastructure.solver.profiles import center_on_peak, peak_location, sech_power


def passing():
    return True, "ok"


def failing():
    return False, "off by 3%"


def raising():
    raise NonConvergence("series missed its tolerance")


@pytest.fixture
def validation_config(make_config):
    return make_config("validate")


def should_pass_when_every_check_passes(validation_config, fake_writer, fake_renderer):
    # Arrange
    use_case = RunValidationUseCase(
        validation_config, fake_writer, fake_renderer, checks=[("first", passing), ("second", passing)]
    )

    # Act
    success = use_case.execute()

    # Assert
    assert success is True
    assert [result.name for result in use_case.results] == ["first", "second"]
    assert fake_writer.text["validation.md"] == "first: PASS\nsecond: PASS"
    assert use_case.report_text.endswith("timed")


def should_fail_without_aborting_the_suite(validation_config, fake_writer, fake_renderer):
    # Arrange
    checks = [("fails", failing), ("raises", raising), ("passes", passing)]
    use_case = RunValidationUseCase(validation_config, fake_writer, fake_renderer, checks=checks)

    # Act
    success = use_case.execute()

    # Assert
    assert success is False
    assert [result.passed for result in use_case.results] == [False, False, True]
    assert use_case.results[1].detail == "NonConvergence: series missed its tolerance"
    assert "error.json" not in fake_writer.json
    assert fake_renderer.calls[0]["passed_count"] == 1


def should_fail_an_empty_suite(validation_config, fake_writer, fake_renderer):
    # Act
    success = RunValidationUseCase(validation_config, fake_writer, fake_renderer, checks=[]).execute()

    # Assert
    assert success is False


def should_list_twelve_default_checks(validation_config, fake_writer, fake_renderer):
    # Act
    use_case = RunValidationUseCase(validation_config, fake_writer, fake_renderer)

    # Assert
    assert len(use_case.checks) == 12


def should_confirm_constant_identity_check(validation_config, fake_writer, fake_renderer):
    # Arrange
    use_case = RunValidationUseCase(validation_config, fake_writer, fake_renderer)

    # Act
    passed, detail = use_case.check_constant_identity()

    # Assert
    assert passed, detail


def should_confirm_symbol_check(validation_config, fake_writer, fake_renderer):
    # Arrange
    use_case = RunValidationUseCase(validation_config, fake_writer, fake_renderer)

    # Act
    passed, detail = use_case.check_symbol()

    # Assert
    assert passed, detail


def should_start_the_evenness_flow_away_from_every_reflection():
    # Arrange
    grid = Grid(half_length=20.0, points=512)
    field = RadialField(grid, sech_power(grid.nodes, 1.0, 2.0))

    # Act
    start = lopsided_start(field)

    # Assert
    assert start.asymmetry() > 0.1
    assert peak_location(start.values, grid) > 0.5
    centered, _ = center_on_peak(start.values, grid)
    assert RadialField(grid, centered).asymmetry() > 0.01


@pytest.mark.slow
def should_confirm_evenness_with_an_unsymmetrized_flow(validation_config, fake_writer, fake_renderer):
    # Arrange
    use_case = RunValidationUseCase(validation_config, fake_writer, fake_renderer)

    # Act
    passed, detail = use_case.check_evenness()

    # Assert
    assert passed, detail
    assert "unsymmetrized flow" in detail
