"""
Application Ports - Protocol Definitions

Defines the interfaces (protocols) for dependencies used by the application layer.
These protocols decouple the use cases from the file system and template engine.
"""

from pathlib import Path
from typing import Any, Dict, Iterable, Mapping, Protocol, Sequence


class ReportWriterPort(Protocol):
    """Protocol for emitting command outputs."""

    def write_json(self, name: str, record: Mapping[str, Any]) -> Path:
        """
        Write a JSON object, keys in insertion order.

        Args:
            name: File name relative to the output directory
            record: Object to serialize

        Returns:
            Path of the written file
        """
        ...

    def write_csv(self, name: str, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> Path:
        """
        Write a CSV table with a header row.

        Args:
            name: File name relative to the output directory
            header: Column names
            rows: Row values in header order

        Returns:
            Path of the written file
        """
        ...

    def write_text(self, name: str, text: str) -> Path:
        """Write plain UTF-8 text."""
        ...


class RendererPort(Protocol):
    """Protocol for template rendering."""

    def render_template(self, template_name: str, context: Dict[str, Any]) -> str:
        """
        Render a template with given context.

        Args:
            template_name: Name of the template file
            context: Template variables

        Returns:
            Rendered text
        """
        ...
