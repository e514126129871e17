"""Report output - schema-stable JSON and plain-text summaries.

Every report payload carries the same top-level keys in the same order:
command, inputs, the result body, seed and tool_version. Floats are written
with 17 significant digits so doubles survive a round trip; non-finite floats
become null.
"""

import json
import math
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Optional

import click

from src.config.settings import get_config
from src.core.errors import HarmonicaError
from src.core.interval import Box2, Interval
from src.utils.logger import setup_logger

logger = setup_logger(__name__)

TOOL_VERSION = "1.0.0"


def format_float(value: float) -> str:
    """Shortest-safe rendering with 17 significant digits; null if not finite."""
    if not math.isfinite(value):
        return "null"
    digits = get_config().get("output.float_digits")
    text = format(value, f".{digits}g")
    if "." not in text and "e" not in text:
        text += ".0"
    return text


def _plain(value: Any) -> Any:
    """Convert library objects into JSON-shaped values."""
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, Interval):
        return value.to_list()
    if isinstance(value, Box2):
        return value.to_dict()
    if hasattr(value, "to_dict"):
        return value.to_dict()
    return value


def _encode(value: Any, indent: int, level: int) -> str:
    value = _plain(value)
    pad = " " * (indent * (level + 1))
    closing = " " * (indent * level)
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format_float(value)
    if isinstance(value, str):
        return json.dumps(value, ensure_ascii=False)
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [
            f"{pad}{json.dumps(str(key))}: {_encode(item, indent, level + 1)}"
            for key, item in value.items()
        ]
        return "{\n" + ",\n".join(items) + "\n" + closing + "}"
    if isinstance(value, (list, tuple)):
        if not value:
            return "[]"
        items = [f"{pad}{_encode(item, indent, level + 1)}" for item in value]
        return "[\n" + ",\n".join(items) + "\n" + closing + "]"
    return json.dumps(str(value))


def to_json(payload: Dict[str, Any]) -> str:
    """Deterministic JSON text with a trailing newline."""
    return _encode(payload, get_config().get("output.json_indent"), 0) + "\n"


def build_payload(
    command: str,
    inputs: Dict[str, Any],
    body: Dict[str, Any],
    seed: Optional[int] = None,
) -> Dict[str, Any]:
    """Assemble a report in the fixed key order."""
    payload: Dict[str, Any] = {"command": command, "inputs": inputs}
    payload.update(body)
    payload["seed"] = seed
    payload["tool_version"] = TOOL_VERSION
    return payload


def error_payload(command: Optional[str], error: Exception) -> Dict[str, Any]:
    """Structured error object for a failed command."""
    if isinstance(error, HarmonicaError):
        details = error.to_dict()
    else:
        details = {"type": type(error).__name__, "message": str(error), "details": {}}
    return {
        "command": command,
        "error": details,
        "tool_version": TOOL_VERSION,
    }


def _text_lines(value: Any, level: int) -> List[str]:
    value = _plain(value)
    pad = "  " * level
    if isinstance(value, dict):
        lines = []
        for key, item in value.items():
            item = _plain(item)
            if isinstance(item, dict) and item:
                lines.append(f"{pad}{key}:")
                lines.extend(_text_lines(item, level + 1))
            else:
                lines.append(f"{pad}{key}: {_text_scalar(item)}")
        return lines
    return [f"{pad}{_text_scalar(value)}"]


def _text_scalar(value: Any) -> str:
    value = _plain(value)
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, float):
        return f"{value:.10g}"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_text_scalar(v) for v in value) + "]"
    if isinstance(value, dict):
        return "{}" if not value else ", ".join(f"{k}={_text_scalar(v)}" for k, v in value.items())
    return str(value)


def render_text(payload: Dict[str, Any]) -> str:
    """Human-readable summary of a payload."""
    return "\n".join(_text_lines(payload, 0)) + "\n"


@dataclass
class ReportWriter:
    """Writes payloads as JSON or text to stdout or a file."""
    output: str = "json"
    out_path: Optional[str] = None

    def render(self, payload: Dict[str, Any]) -> str:
        if self.output == "text":
            return render_text(payload)
        return to_json(payload)

    def write(self, payload: Dict[str, Any]) -> str:
        """Render and emit a payload; returns the rendered text."""
        text = self.render(payload)
        if self.out_path:
            path = Path(self.out_path)
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text, encoding="utf-8")
            logger.info(f"Report written to {path}")
        else:
            click.echo(text, nl=False)
        return text
