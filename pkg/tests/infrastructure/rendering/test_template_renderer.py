"""
Unit tests for TemplateRenderer infrastructure component.

Tests the Jinja2 template rendering functionality, including:
- Template rendering
- Custom filters
- The packaged validation report template
"""

import math

import jinja2
import pytest

from src.domain.entities import ValidationCheck
from src.domain.value_objects import Grid
from src.infrastructure.rendering import TemplateRenderer
from src.infrastructure.rendering.template_renderer import TEMPLATES_DIR, format_number


@pytest.fixture
def templates_dir(temp_dir):
    """Create a templates directory with a sample template."""
    templates = temp_dir / "templates"
    templates.mkdir()
    (templates / "test.md.j2").write_text("value: {{ value | number(3) }}\n")
    return templates


@pytest.fixture
def report_context():
    return {
        "n": 3,
        "gamma": 0.5,
        "grid": Grid(),
        "checks": [
            ValidationCheck(name="constant identity", passed=True, detail="max relative error 1e-9", seconds=1.25),
            ValidationCheck(name="Hardy endpoint", passed=False, detail="extrapolation gap 2%", seconds=30.0),
        ],
        "passed_count": 1,
    }


def should_default_to_packaged_templates():
    # Act
    renderer = TemplateRenderer()

    # Assert
    assert renderer.templates_dir == TEMPLATES_DIR
    assert (TEMPLATES_DIR / "validation_report.md.j2").is_file()


def should_render_template_with_context(templates_dir):
    # Arrange
    renderer = TemplateRenderer(templates_dir)

    # Act
    result = renderer.render_template("test.md.j2", {"value": math.pi})

    # Assert
    assert result == "value: 3.14\n"


def should_raise_on_missing_variables(templates_dir):
    # Arrange
    renderer = TemplateRenderer(templates_dir)

    # Act & Assert
    with pytest.raises(jinja2.UndefinedError):
        renderer.render_template("test.md.j2", {})


@pytest.mark.parametrize("value, expected", [(None, "n/a"), (math.nan, "n/a"), (0.000123456789, "0.000123457")])
def should_format_numbers(value, expected):
    # Act & Assert
    assert format_number(value) == expected


def should_render_validation_table_without_timing(report_context):
    # Arrange
    renderer = TemplateRenderer()

    # Act
    text = renderer.render_template("validation_report.md.j2", {**report_context, "show_timing": False})

    # Assert
    assert "| 1 | constant identity | PASS | max relative error 1e-9 |" in text
    assert "| 2 | Hardy endpoint | FAIL | extrapolation gap 2% |" in text
    assert " s |" not in text
    assert "1 of 2 checks passed." in text


def should_render_validation_table_with_timing(report_context):
    # Arrange
    renderer = TemplateRenderer()

    # Act
    text = renderer.render_template("validation_report.md.j2", {**report_context, "show_timing": True})

    # Assert
    assert "| 1 | constant identity | PASS | max relative error 1e-9 | 1.2 s |" in text
    assert "30.0 s" in text
