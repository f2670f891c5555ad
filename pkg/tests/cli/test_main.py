"""
Tests for the click command group.
"""

import json

import pytest
from click.testing import CliRunner

from src.application.use_cases import RunValidationUseCase
from src.cli.main import cli
from src.domain.errors import FlowStall, PositivityLoss


@pytest.fixture
def runner():
    return CliRunner()


def should_write_constants_to_output_dir(runner, temp_dir):
    # Act
    result = runner.invoke(cli, ["constants", "--gamma", "0.5", "--alpha", "0.0", "-o", str(temp_dir)])

    # Assert
    assert result.exit_code == 0, result.output
    record = json.loads((temp_dir / "constants.json").read_text(encoding="utf-8"))
    assert record["n"] == 3
    assert abs(record["C_alpha"]) <= 1e-7


def should_produce_byte_identical_outputs_on_rerun(runner, temp_dir):
    # Arrange
    arguments = ["roots", "--gamma", "0.5", "--alpha", "-0.4"]

    # Act
    runner.invoke(cli, [*arguments, "-o", str(temp_dir / "first")])
    runner.invoke(cli, [*arguments, "-o", str(temp_dir / "second")])

    # Assert
    first = (temp_dir / "first" / "roots.csv").read_bytes()
    assert first == (temp_dir / "second" / "roots.csv").read_bytes()
    assert first.startswith(b"j,tau,sigma,residual\n")


def should_read_output_dir_from_environment(runner, temp_dir):
    # Act
    result = runner.invoke(cli, ["symbol", "--gamma", "0.3"], env={"CKN_OUTPUT_DIR": str(temp_dir)})

    # Assert
    assert result.exit_code == 0, result.output
    assert (temp_dir / "symbol.csv").is_file()


def should_exit_with_two_on_configuration_errors(runner, temp_dir):
    # Act
    result = runner.invoke(
        cli, ["solve", "--gamma", "0.5", "--alpha", "0.0", "--beta", "0.5", "-o", str(temp_dir)]
    )

    # Assert
    assert result.exit_code == 2
    assert "hardy-check" in result.output
    assert not (temp_dir / "error.json").exists()


def should_exit_with_two_on_malformed_files(runner, temp_dir):
    # Arrange
    config = temp_dir / "bad.toml"
    config.write_text("gamma = \n", encoding="utf-8")

    # Act
    result = runner.invoke(cli, ["constants", "--config", str(config)])

    # Assert
    assert result.exit_code == 2
    assert "Line 1" in result.output


def should_exit_with_one_and_write_error_report_on_failure(runner, temp_dir, monkeypatch):
    # Arrange
    def failing(*args, **kwargs):
        raise PositivityLoss("iterate changed sign", minimum=-0.1)

    monkeypatch.setattr("src.application.use_cases.solve_ground_state.solve_ground_state", failing)

    # Act
    result = runner.invoke(cli, ["solve", "--gamma", "0.5", "--alpha", "0.3", "--beta", "0.5", "-o", str(temp_dir)])

    # Assert
    assert result.exit_code == 1
    report = json.loads((temp_dir / "error.json").read_text(encoding="utf-8"))
    assert report["kind"] == "PositivityLoss"
    assert report["details"]["minimum"] == -0.1



def should_route_solve_through_the_gradient_flow_on_request(runner, temp_dir, monkeypatch):
    # Arrange
    def stalled(*args, **kwargs):
        raise FlowStall("gradient flow did not settle", residual=1e-3)

    monkeypatch.setattr("src.application.use_cases.solve_ground_state.flow_ground_state", stalled)
    arguments = ["solve", "--gamma", "0.5", "--alpha", "0.3", "--beta", "0.5", "--method", "flow", "-o", str(temp_dir)]

    # Act
    result = runner.invoke(cli, arguments)

    # Assert
    assert result.exit_code == 1
    report = json.loads((temp_dir / "error.json").read_text(encoding="utf-8"))
    assert report["kind"] == "FlowStall"


def should_reject_unknown_solve_methods(runner, temp_dir):
    # Act
    result = runner.invoke(cli, ["solve", "--gamma", "0.5", "--method", "secant", "-o", str(temp_dir)])

    # Assert
    assert result.exit_code == 2
    assert not (temp_dir / "error.json").exists()

def should_write_header_only_sweep_for_empty_range(runner, temp_dir):
    # Arrange
    config = temp_dir / "sweep.toml"
    config.write_text("gamma = 0.5\n[sweep]\nalphas = []\n", encoding="utf-8")

    # Act
    result = runner.invoke(cli, ["sweep", "--config", str(config), "--jobs", "2", "-o", str(temp_dir)])

    # Assert
    assert result.exit_code == 0, result.output
    header = "alpha,beta,p,R,lambda0,lambda1,verdict,sigma0,decay_fit,converged\n"
    assert (temp_dir / "sweep.csv").read_text(encoding="utf-8") == header
    assert (temp_dir / "contour.csv").read_text(encoding="utf-8") == "alpha,beta_star\n"


@pytest.mark.parametrize("passed, exit_code", [(True, 0), (False, 1)])
def should_print_validation_table_and_set_exit_code(runner, temp_dir, monkeypatch, passed, exit_code):
    # Arrange
    monkeypatch.setattr(RunValidationUseCase, "default_checks", lambda self: [("stub check", lambda: (passed, "stub"))])

    # Act
    result = runner.invoke(cli, ["validate", "-o", str(temp_dir)])

    # Assert
    assert result.exit_code == exit_code
    assert "| 1 | stub check |" in result.output
    assert (temp_dir / "validation.md").is_file()
