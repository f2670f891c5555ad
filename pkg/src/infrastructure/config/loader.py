"""
Config Loader - Infrastructure Layer

Reads TOML run configurations, merges command-line overrides and validates
everything into a RunConfig. Unknown keys, wrong types and parameter points
outside the admissible set are hard errors that name the broken constraint.
"""

import logging
import math
import re
import tomllib
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Set, Tuple

import numpy as np

from src.domain.errors import ParseError, ValidationError
from src.domain.value_objects import (
    ContinuationSettings,
    Grid,
    HardySettings,
    Parameters,
    RunConfig,
    SweepSettings,
    SymbolSettings,
    Tolerances,
)

logger = logging.getLogger(__name__)

COMMANDS = ("constants", "symbol", "roots", "solve", "spectrum", "sweep", "continuation", "hardy-check", "validate")
NEEDS_GAMMA = {"constants", "symbol", "roots", "solve", "spectrum", "sweep", "hardy-check"}
NEEDS_PARAMS = {"constants", "roots", "solve", "spectrum", "hardy-check"}
SUPERLINEAR = {"solve", "spectrum"}
SOLVER_METHODS = ("newton", "flow")

SECTIONS: Dict[str, Set[str]] = {
    "grid": {"T", "N"},
    "tolerances": {"newton", "quadrature", "eig"},
    "symbol": {"xi_max", "count", "modes"},
    "roots": {"count"},
    "spectrum": {"k"},
    "sweep": {"alphas", "alpha_range", "beta_offsets", "jobs"},
    "continuation": {"c0", "p0", "gamma0", "gamma1", "steps"},
    "hardy": {"R", "T", "N"},
    "solver": {"method"},
}
TOP_LEVEL = {"n", "gamma", "alpha", "beta", "output_dir"}

_LOCATION = re.compile(r"at line (\d+), column (\d+)")


def _parse_toml(source: str) -> Dict[str, Any]:
    try:
        return tomllib.loads(source)
    except tomllib.TOMLDecodeError as e:
        match = _LOCATION.search(str(e))
        line, column = (int(match.group(1)), int(match.group(2))) if match else (None, None)
        raise ParseError(f"malformed configuration: {e}", line_number=line, column_number=column) from e


def _merge(document: Dict[str, Any], overrides: Mapping[str, Any]) -> Dict[str, Any]:
    """Apply dotted-key overrides ("grid.T") on top of the document; None values are skipped."""
    merged = {key: dict(value) if isinstance(value, dict) else value for key, value in document.items()}
    for dotted, value in overrides.items():
        if value is None:
            continue
        section, _, key = dotted.rpartition(".")
        target = merged.setdefault(section, {}) if section else merged
        target[key] = value
    return merged


def _check_keys(document: Dict[str, Any]) -> None:
    for key, value in document.items():
        if key in SECTIONS:
            if not isinstance(value, dict):
                raise ValidationError(f"[{key}] is a section", f"'{key}' must be a table")
            unknown = sorted(set(value) - SECTIONS[key])
            if unknown:
                raise ValidationError(f"unknown key {key}.{unknown[0]}", f"unknown key '{unknown[0]}' in [{key}]")
        elif key not in TOP_LEVEL:
            raise ValidationError(f"unknown key {key}", f"unknown configuration key '{key}'")


def _number(value: Any, name: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
        raise ValidationError(f"{name} is a finite number", f"'{name}' must be a finite number, got {value!r}")
    return float(value)


def _integer(value: Any, name: str, minimum: int) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError(f"{name} is an integer", f"'{name}' must be an integer, got {value!r}")
    if value < minimum:
        raise ValidationError(f"{name} >= {minimum}", f"'{name}' must be at least {minimum}, got {value}")
    return value


def _positive(value: Any, name: str) -> float:
    number = _number(value, name)
    if number <= 0.0:
        raise ValidationError(f"{name} > 0", f"'{name}' must be positive, got {number}")
    return number


def _numbers(value: Any, name: str) -> Tuple[float, ...]:
    if not isinstance(value, list):
        raise ValidationError(f"{name} is a list", f"'{name}' must be a list of numbers")
    return tuple(_number(item, name) for item in value)


def _string(value: Any, name: str) -> str:
    if not isinstance(value, (str, Path)):
        raise ValidationError(f"{name} is a string", f"'{name}' must be a string, got {value!r}")
    return str(value)


def _grid(section: Mapping[str, Any], default: Grid) -> Grid:
    half_length = _positive(section.get("T", default.half_length), "T")
    points = _integer(section.get("N", default.points), "N", 1)
    return Grid(half_length=half_length, points=points)


def _tolerances(section: Mapping[str, Any]) -> Tolerances:
    defaults = Tolerances()
    return Tolerances(
        newton=_positive(section.get("newton", defaults.newton), "newton"),
        quadrature=_positive(section.get("quadrature", defaults.quadrature), "quadrature"),
        eig=_positive(section.get("eig", defaults.eig), "eig"),
    )


def _symbol(section: Mapping[str, Any]) -> SymbolSettings:
    defaults = SymbolSettings()
    return SymbolSettings(
        xi_max=_positive(section.get("xi_max", defaults.xi_max), "xi_max"),
        count=_integer(section.get("count", defaults.count), "count", 2),
        modes=_integer(section.get("modes", defaults.modes), "modes", 1),
    )


def _alphas(section: Mapping[str, Any]) -> Tuple[float, ...]:
    if "alphas" in section and "alpha_range" in section:
        raise ValidationError("alphas xor alpha_range", "give either sweep.alphas or sweep.alpha_range, not both")
    if "alpha_range" in section:
        bounds = section["alpha_range"]
        if not isinstance(bounds, list) or len(bounds) != 3:
            raise ValidationError(
                "alpha_range = [start, stop, count]", "sweep.alpha_range must be [start, stop, count]"
            )
        start, stop = _number(bounds[0], "alpha_range"), _number(bounds[1], "alpha_range")
        count = _integer(bounds[2], "alpha_range count", 0)
        return tuple(float(alpha) for alpha in np.linspace(start, stop, count))
    return _numbers(section.get("alphas", []), "alphas")


def _sweep(section: Mapping[str, Any], n: int, gamma: float) -> SweepSettings:
    alphas = _alphas(section)
    offsets = _numbers(section.get("beta_offsets", [0.0]), "beta_offsets")
    for offset in offsets:
        if not 0.0 <= offset < gamma:
            raise ValidationError(
                "0 <= beta_offset < gamma",
                f"beta offset {offset} must lie in [0, gamma); the endpoint beta = alpha+gamma is for hardy-check",
            )
    for alpha in alphas:
        for offset in offsets:
            Parameters(n=n, gamma=gamma, alpha=alpha, beta=alpha + offset)
    jobs = _integer(section.get("jobs", 1), "jobs", 1)
    return SweepSettings(alphas=alphas, beta_offsets=offsets, jobs=jobs)


def _continuation(section: Mapping[str, Any]) -> ContinuationSettings:
    defaults = ContinuationSettings()
    settings = ContinuationSettings(
        c0=_number(section.get("c0", defaults.c0), "c0"),
        p0=_number(section.get("p0", defaults.p0), "p0"),
        gamma0=_number(section.get("gamma0", defaults.gamma0), "gamma0"),
        gamma1=_number(section.get("gamma1", defaults.gamma1), "gamma1"),
        steps=_integer(section.get("steps", defaults.steps), "steps", 1),
    )
    for name in ("gamma0", "gamma1"):
        value = getattr(settings, name)
        if not 0.0 < value <= 1.0:
            raise ValidationError(f"0 < {name} <= 1", f"'{name}' must lie in (0, 1], got {value}")
    if settings.p0 <= 2.0:
        raise ValidationError("p0 > 2", f"'p0' must exceed 2, got {settings.p0}")
    return settings


def _hardy(section: Mapping[str, Any]) -> HardySettings:
    defaults = HardySettings()
    radii = _numbers(section.get("R", list(defaults.radii)), "R")
    grid = _grid(section, defaults.grid)
    for radius in radii:
        if radius <= 0.0 or radius + 2.0 > grid.half_length:
            raise ValidationError(
                "0 < R <= hardy.T - 2",
                f"plateau radius {radius} must be positive and at most T-2 = {grid.half_length - 2}",
            )
    return HardySettings(radii=radii, grid=grid)


def _solver_method(section: Mapping[str, Any]) -> str:
    method = _string(section.get("method", SOLVER_METHODS[0]), "method")
    if method not in SOLVER_METHODS:
        raise ValidationError(
            "method in newton, flow", f"solver.method must be one of {', '.join(SOLVER_METHODS)}, got {method!r}"
        )
    return method


def _parameters(document: Mapping[str, Any], command: str, n: int, gamma: float) -> Parameters:
    alpha = _number(document.get("alpha", 0.0), "alpha")
    default_beta = alpha + gamma if command == "hardy-check" else alpha
    beta = _number(document.get("beta", default_beta), "beta")
    params = Parameters(n=n, gamma=gamma, alpha=alpha, beta=beta)
    if command in SUPERLINEAR and params.is_hardy_endpoint:
        raise ValidationError(
            "beta < alpha+gamma",
            f"beta = alpha+gamma gives p = 2, where no extremal exists; run 'hardy-check' instead of '{command}'",
        )
    if command == "hardy-check" and not params.is_hardy_endpoint:
        raise ValidationError("beta = alpha+gamma", f"hardy-check needs beta = alpha+gamma, got beta={beta}")
    return params


def parse_config(
    source: Optional[str],
    command: str,
    overrides: Optional[Mapping[str, Any]] = None,
) -> RunConfig:
    """
    Build a validated RunConfig for one command.

    Args:
        source: TOML document text, or None for flags only
        command: Subcommand the configuration is for
        overrides: Dotted-key values from the command line, applied over the document

    Returns:
        The validated RunConfig with defaults filled in

    Raises:
        ParseError: If the document is not valid TOML (with line and column)
        ValidationError: If a key is unknown or a value violates a constraint
    """
    if command not in COMMANDS:
        raise ValidationError("known command", f"unknown command '{command}'")
    document = _parse_toml(source) if source else {}
    document = _merge(document, overrides or {})
    _check_keys(document)

    n = _integer(document.get("n", 3), "n", 2)
    gamma: Optional[float] = None
    if "gamma" in document:
        gamma = _number(document["gamma"], "gamma")
        if not 0.0 < gamma < 1.0:
            raise ValidationError("0 < gamma < 1", f"gamma must lie in (0, 1), got {gamma}")
    elif command in NEEDS_GAMMA:
        raise ValidationError("gamma is required", f"'{command}' needs gamma")

    params = _parameters(document, command, n, gamma) if command in NEEDS_PARAMS else None
    sections = {name: document.get(name, {}) for name in SECTIONS}
    spectrum_k = _integer(sections["spectrum"].get("k", 6), "k", 1)
    if spectrum_k > 10:
        raise ValidationError("k <= 10", f"spectrum.k must be at most 10, got {spectrum_k}")

    config = RunConfig(
        command=command,
        n=n,
        gamma=gamma,
        params=params,
        grid=_grid(sections["grid"], Grid()),
        tolerances=_tolerances(sections["tolerances"]),
        output_dir=_string(document.get("output_dir", "."), "output_dir"),
        symbol=_symbol(sections["symbol"]),
        roots_count=_integer(sections["roots"].get("count", 5), "count", 1),
        spectrum_k=spectrum_k,
        sweep=_sweep(sections["sweep"], n, gamma) if command == "sweep" else SweepSettings(),
        continuation=_continuation(sections["continuation"]),
        hardy=_hardy(sections["hardy"]),
        solver_method=_solver_method(sections["solver"]),
    )
    logger.debug(f"Parsed configuration for '{command}': n={n}, gamma={gamma}, params={params}")
    return config


def load_config(path: Optional[Path], command: str, overrides: Optional[Mapping[str, Any]] = None) -> RunConfig:
    """Read `path` (if given) as UTF-8 and parse it with parse_config."""
    source = None
    if path is not None:
        try:
            source = Path(path).read_text(encoding="utf-8")
        except OSError as e:
            raise ParseError(f"cannot read configuration {path}: {e}") from e
    return parse_config(source, command, overrides)
