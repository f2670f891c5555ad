"""
Infrastructure Layer

Numerical kernels and technical adapters:
- specfun, constants, spectral: special functions, structural constants, Fourier multipliers
- solver, stability: ground states, continuation, linearized spectra, sweeps
- config: TOML configuration loading and validation
- fs: deterministic CSV/JSON/text emission
- rendering: Jinja2 report templates
"""

from src.infrastructure.config import load_config, parse_config
from src.infrastructure.fs import ReportWriter
from src.infrastructure.rendering import TemplateRenderer

__all__ = [
    "ReportWriter",
    "TemplateRenderer",
    "load_config",
    "parse_config",
]
