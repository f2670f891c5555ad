"""
Rendering Infrastructure Module

Jinja2 rendering of text reports from packaged templates.
"""

from src.infrastructure.rendering.template_renderer import TemplateRenderer

__all__ = ["TemplateRenderer"]
