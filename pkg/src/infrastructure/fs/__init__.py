"""
File System Adapters

Deterministic, atomic writers for the CSV, JSON and text outputs.
"""

from src.infrastructure.fs.report_writer import ReportWriter

__all__ = ["ReportWriter"]
