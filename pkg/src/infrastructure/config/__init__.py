"""Run configuration parsing and validation."""

from src.infrastructure.config.loader import COMMANDS, load_config, parse_config

__all__ = ["COMMANDS", "load_config", "parse_config"]
