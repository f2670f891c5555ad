#!/usr/bin/env python3
"""
cknspectral - Pseudospectral computations for the fractional weighted
Hardy-Sobolev (CKN) inequality on the cylinder.

Subcommands evaluate the constants and symbols, solve for radial ground
states, analyze their linearization, sweep the (alpha, beta) plane, follow
the gamma -> 1 branch, check the Hardy endpoint and run the acceptance suite.

Exit status: 0 on success, 1 on a computational failure (error.json is
written to the output directory), 2 on a configuration error.
"""

import logging
from pathlib import Path
from typing import Any, Callable, Dict

import click
import coloredlogs

from src.application.use_cases import (
    AnalyzeSpectrumUseCase,
    CheckHardyLimitUseCase,
    CommandUseCase,
    ComputeConstantsUseCase,
    ContinueBranchUseCase,
    FindIndicialRootsUseCase,
    RunValidationUseCase,
    SolveGroundStateUseCase,
    SweepRegionUseCase,
    TabulateSymbolUseCase,
)
from src.domain.errors import ConfigError
from src.domain.value_objects import RunConfig
from src.infrastructure.config import load_config
from src.infrastructure.fs import ReportWriter
from src.infrastructure.rendering import TemplateRenderer

logging.basicConfig(level=logging.INFO, format="%(asctime)s - %(name)s - %(levelname)s - %(message)s")
logger = logging.getLogger(__name__)

UseCaseFactory = Callable[[RunConfig, ReportWriter], CommandUseCase]


class ConfigurationError(click.ClickException):
    """Invalid configuration; click prints the message and exits with status 2."""

    exit_code = 2


def common_options(command: Callable) -> Callable:
    """Options shared by every subcommand."""
    options = [
        click.option(
            "--config",
            "-c",
            "config_path",
            type=click.Path(exists=True, dir_okay=False, path_type=Path),
            help="TOML run configuration.",
        ),
        click.option("--n", "n", type=int, help="Dimension n (default 3)."),
        click.option("--gamma", type=float, help="Order gamma in (0, 1)."),
        click.option("--alpha", type=float, help="Weight alpha."),
        click.option("--beta", type=float, help="Weight beta (default alpha)."),
        click.option("--T", "half_length", type=float, help="Grid half-length T (default 20)."),
        click.option("--N", "points", type=int, help="Grid points N, a power of two (default 2048)."),
        click.option("--tol", type=float, help="Newton tolerance (default 1e-10)."),
        click.option(
            "--output-dir",
            "-o",
            envvar="CKN_OUTPUT_DIR",
            type=click.Path(file_okay=False, path_type=Path),
            help="Output directory [env: CKN_OUTPUT_DIR].",
        ),
        click.option("--verbose", "-v", is_flag=True, help="Enable verbose logging."),
    ]
    for option in reversed(options):
        command = option(command)
    return command


def configure_logging(verbose: bool) -> None:
    if verbose:
        logging.getLogger().setLevel(logging.DEBUG)
        coloredlogs.install(level="DEBUG")
    else:
        coloredlogs.install(level="INFO")


def overrides_for(command: str, options: Dict[str, Any]) -> Dict[str, Any]:
    """Map click options onto dotted configuration keys; unset options are None and ignored."""
    grid_section = "hardy" if command == "hardy-check" else "grid"
    output_dir = options.get("output_dir")
    overrides = {
        "n": options.get("n"),
        "gamma": options.get("gamma"),
        "alpha": options.get("alpha"),
        "beta": options.get("beta"),
        f"{grid_section}.T": options.get("half_length"),
        f"{grid_section}.N": options.get("points"),
        "tolerances.newton": options.get("tol"),
        "output_dir": str(output_dir) if output_dir is not None else None,
        "sweep.jobs": options.get("jobs"),
        "solver.method": options.get("method"),
    }
    for key in ("c0", "p0", "gamma0", "gamma1", "steps"):
        overrides[f"continuation.{key}"] = options.get(key)
    return overrides


def run_command(command: str, options: Dict[str, Any], factory: UseCaseFactory) -> CommandUseCase:
    """
    Load the configuration, build the use case and execute it.

    Raises:
        ConfigurationError: If the configuration cannot be parsed or validated
        click.Abort: If the computation fails
    """
    configure_logging(options.get("verbose", False))
    try:
        config = load_config(options.get("config_path"), command, overrides_for(command, options))
    except ConfigError as e:
        location = getattr(e, "location_info", None)
        raise ConfigurationError(f"{e.message} ({location})" if location else e.message) from e

    output_dir = Path(config.output_dir).resolve()
    logger.info(f"📝 Output directory: {output_dir}")

    use_case = factory(config, ReportWriter(output_dir))
    if not use_case.execute():
        logger.error(f"❌ Command '{command}' failed")
        raise click.Abort()
    return use_case


@click.group()
@click.version_option(version="0.1.0")
def cli():
    """cknspectral - fractional CKN extremals on the cylinder."""


@cli.command()
@common_options
def constants(**options):
    """Evaluate sigma, c, kappa, C(alpha) and kappa_gamma; writes constants.json."""
    run_command("constants", options, ComputeConstantsUseCase)


@cli.command()
@common_options
def symbol(**options):
    """Tabulate the mode symbols Theta^(m)(xi); writes symbol.csv."""
    run_command("symbol", options, TabulateSymbolUseCase)


@cli.command()
@common_options
def roots(**options):
    """Find the indicial roots of Theta^(0)(z) + C(alpha); writes roots.csv."""
    run_command("roots", options, FindIndicialRootsUseCase)


@cli.command()
@common_options
@click.option(
    "--method",
    type=click.Choice(["newton", "flow"]),
    help="newton (default) or flow: gradient flow with no symmetry imposed.",
)
def solve(**options):
    """Solve for the radial ground state; writes solution.csv and solution.json."""
    run_command("solve", options, SolveGroundStateUseCase)


@cli.command()
@common_options
def spectrum(**options):
    """Analyze the linearization around the ground state; writes spectrum.json."""
    run_command("spectrum", options, AnalyzeSpectrumUseCase)


@cli.command()
@common_options
@click.option("--jobs", "-j", type=int, help="Worker threads for the sweep (default 1).")
def sweep(**options):
    """Sweep the (alpha, beta) plane; writes sweep.csv and contour.csv."""
    run_command("sweep", options, SweepRegionUseCase)


@cli.command()
@common_options
@click.option("--c0", type=float, help="Mass shift c0 (default 1).")
@click.option("--p0", type=float, help="Fixed exponent p0 (default 4).")
@click.option("--gamma0", type=float, help="Starting order (default 0.9).")
@click.option("--gamma1", type=float, help="Final order (default 1).")
@click.option("--steps", type=int, help="Continuation steps (default 10).")
def continuation(**options):
    """Follow the fixed-exponent branch in gamma; writes branch_XXX.csv and branch.csv."""
    run_command("continuation", options, ContinueBranchUseCase)


@cli.command("hardy-check")
@common_options
def hardy_check(**options):
    """Approach 2*kappa at beta = alpha+gamma with cutoff profiles; writes hardy.csv and hardy.json."""
    run_command("hardy-check", options, CheckHardyLimitUseCase)


@cli.command()
@common_options
def validate(**options):
    """Run the acceptance suite; prints the pass/fail table and writes validation.md."""
    suite: Dict[str, RunValidationUseCase] = {}

    def factory(config: RunConfig, writer: ReportWriter) -> RunValidationUseCase:
        suite["use_case"] = RunValidationUseCase(config, writer, TemplateRenderer())
        return suite["use_case"]

    try:
        run_command("validate", options, factory)
    finally:
        if "use_case" in suite and suite["use_case"].report_text:
            click.echo(suite["use_case"].report_text)


if __name__ == "__main__":
    cli()
