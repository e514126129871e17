"""Persistence layer for report output."""

from .report_writer import (
    TOOL_VERSION,
    ReportWriter,
    build_payload,
    error_payload,
    format_float,
    render_text,
    to_json,
)

__all__ = [
    'TOOL_VERSION',
    'ReportWriter',
    'build_payload',
    'error_payload',
    'format_float',
    'render_text',
    'to_json',
]
