"""
Template Renderer - Infrastructure Layer

Handles Jinja2 template rendering and configuration for the plain-text
reports (the `validate` acceptance table).
"""

import logging
import math
from pathlib import Path
from typing import Any, Dict, Optional

from jinja2 import Environment, FileSystemLoader, StrictUndefined, select_autoescape

logger = logging.getLogger(__name__)

TEMPLATES_DIR = Path(__file__).parent / "templates"


def format_number(value: Any, digits: int = 6) -> str:
    """Compact general format; NaN and None print as 'n/a'."""
    if value is None:
        return "n/a"
    number = float(value)
    if math.isnan(number):
        return "n/a"
    return f"{number:.{digits}g}"


def format_seconds(value: float) -> str:
    return f"{float(value):.1f} s"


class TemplateRenderer:
    """
    Jinja2 template renderer.

    Args:
        templates_dir: Directory containing Jinja2 templates; defaults to the packaged ones
    """

    def __init__(self, templates_dir: Optional[Path] = None):
        self.templates_dir = Path(templates_dir) if templates_dir is not None else TEMPLATES_DIR

        self.env = Environment(
            loader=FileSystemLoader(str(self.templates_dir)),
            autoescape=select_autoescape(["html", "xml"]),
            undefined=StrictUndefined,
            trim_blocks=True,
            lstrip_blocks=True,
            keep_trailing_newline=True,
        )
        self._register_filters()

        logger.debug(f"Initialized TemplateRenderer with templates from {self.templates_dir}")

    def _register_filters(self) -> None:
        """Register custom Jinja2 filters."""
        self.env.filters["number"] = format_number
        self.env.filters["seconds"] = format_seconds
        self.env.filters["status"] = lambda passed: "PASS" if passed else "FAIL"

    def render_template(self, template_name: str, context: Dict[str, Any]) -> str:
        """
        Render a template with given context.

        Args:
            template_name: Name of the template file
            context: Context dictionary for template rendering

        Returns:
            Rendered text
        """
        try:
            template = self.env.get_template(template_name)
            return template.render(**context)
        except Exception as e:
            logger.error(f"Error rendering template {template_name}: {e}", exc_info=True)
            raise
