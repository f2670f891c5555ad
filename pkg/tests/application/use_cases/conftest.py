"""
Pytest fixtures for use cases tests.

Provides fakes for the report writer and the template renderer.
"""

from pathlib import Path
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence

import pytest

from src.domain.errors import EmitError
from src.infrastructure.config import parse_config


class FakeReportWriter:
    """Fake ReportWriter keeping every output in memory."""

    def __init__(self, failing: Optional[set] = None):
        self.json: Dict[str, Mapping[str, Any]] = {}
        self.csv: Dict[str, List[List[Any]]] = {}
        self.headers: Dict[str, List[str]] = {}
        self.text: Dict[str, str] = {}
        self.failing = failing or set()

    def _target(self, name: str) -> Path:
        if name in self.failing:
            raise EmitError(f"cannot write {name}", path=name)
        return Path("/fake/output") / name

    def write_json(self, name: str, record: Mapping[str, Any]) -> Path:
        path = self._target(name)
        self.json[name] = record
        return path

    def write_csv(self, name: str, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> Path:
        path = self._target(name)
        self.headers[name] = list(header)
        self.csv[name] = [list(row) for row in rows]
        return path

    def write_text(self, name: str, text: str) -> Path:
        path = self._target(name)
        self.text[name] = text
        return path


class FakeRenderer:
    """Fake renderer recording the contexts it was given."""

    def __init__(self):
        self.calls: List[Dict[str, Any]] = []

    def render_template(self, template_name: str, context: Dict[str, Any]) -> str:
        self.calls.append({"template": template_name, **context})
        lines = [f"{check.name}: {'PASS' if check.passed else 'FAIL'}" for check in context["checks"]]
        if context.get("show_timing"):
            lines.append("timed")
        return "\n".join(lines)


@pytest.fixture
def fake_writer():
    """Create a FakeReportWriter."""
    return FakeReportWriter()


@pytest.fixture
def fake_renderer():
    """Create a FakeRenderer."""
    return FakeRenderer()


@pytest.fixture
def make_config():
    """Factory fixture parsing a TOML snippet for one command."""

    def _create(command: str, source: str = "", **overrides: Any):
        return parse_config(source or None, command, overrides)

    return _create


@pytest.fixture
def failing_writer():
    """Factory fixture for a FakeReportWriter that raises EmitError on the named outputs."""

    def _create(*names: str) -> FakeReportWriter:
        return FakeReportWriter(failing=set(names))

    return _create
