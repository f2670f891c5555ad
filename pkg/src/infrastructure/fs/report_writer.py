"""
Report Writer - File System Adapter

Deterministic, atomic emission of CSV, JSON and text outputs. Every file is
written to a temporary sibling and renamed into place, so readers never see
a truncated output. Floats use the shortest round-trip representation, line
endings are LF and the encoding is UTF-8.
"""

import csv
import io
import json
import logging
import math
import os
import tempfile
from pathlib import Path
from typing import Any, Iterable, Mapping, Sequence

import numpy as np

from src.domain.errors import EmitError

logger = logging.getLogger(__name__)


def format_cell(value: Any) -> str:
    """CSV text for one value: repr for floats, lower-case booleans, empty for None."""
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return str(value)


def jsonable(value: Any) -> Any:
    """Plain JSON data; non-finite floats become null."""
    if isinstance(value, Mapping):
        return {str(key): jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [jsonable(item) for item in value]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        number = float(value)
        return number if math.isfinite(number) else None
    if hasattr(value, "value") and isinstance(getattr(value, "value"), str):
        return value.value
    return value


class ReportWriter:
    """
    Writes named outputs under one directory.

    Args:
        output_dir: Target directory, created on first write
    """

    def __init__(self, output_dir: Path):
        self.output_dir = Path(output_dir)

    def write_text(self, name: str, text: str) -> Path:
        """Atomically write `text` to output_dir/name."""
        target = self.output_dir / name
        try:
            target.parent.mkdir(parents=True, exist_ok=True)
            with tempfile.NamedTemporaryFile(
                "w", encoding="utf-8", newline="", dir=target.parent, prefix=f".{target.name}.", delete=False
            ) as handle:
                handle.write(text)
                temporary = Path(handle.name)
            os.replace(temporary, target)
        except OSError as e:
            raise EmitError(f"cannot write {target}: {e}", path=str(target)) from e
        logger.debug(f"Wrote {target}")
        return target

    def write_json(self, name: str, record: Mapping[str, Any]) -> Path:
        """JSON object with keys in insertion order, two-space indent, trailing newline."""
        text = json.dumps(jsonable(record), indent=2, ensure_ascii=False, allow_nan=False)
        return self.write_text(name, text + "\n")

    def write_csv(self, name: str, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> Path:
        """CSV with a header row; a missing or empty `rows` gives a header-only file."""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_cell(value) for value in row])
        return self.write_text(name, buffer.getvalue())
