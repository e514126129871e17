"""
Run configuration for the harmonica CLI
Flat key=value files with '#' comments, merged with command-line flags
"""

import math
import re
from dataclasses import dataclass, field, fields, replace
from enum import Enum
from pathlib import Path
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple

from src.core.errors import ConfigError
from src.core.interval import Interval
from .settings import get_config


class Command(Enum):
    """Subcommands understood by the CLI"""
    CHECK_FN = "check-fn"
    CHECK_SVF = "check-svf"
    CHECK_SET = "check-set"
    STARSHAPED = "starshaped"
    INTEGRATE = "integrate"
    HH = "hh"
    HH_SCALAR = "hh-scalar"
    OPS = "ops"


OPS = ("union", "combo", "product", "cartesian")

_DECIMAL_RE = re.compile(r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?")
_UNSIGNED_RE = re.compile(r"\d+")
_BOOLEANS = {"true": True, "yes": True, "1": True, "false": False, "no": False, "0": False}

Pair = Tuple[float, float]


@dataclass
class RunConfig:
    """Everything one CLI invocation needs"""
    command: Command
    f: Optional[str] = None
    f1: Optional[str] = None
    f2: Optional[str] = None
    g1: Optional[str] = None
    g2: Optional[str] = None
    domain: Optional[Pair] = None
    set: Optional[Pair] = None
    set_a: Optional[Pair] = None
    set_b: Optional[Pair] = None
    ab: Optional[Pair] = None
    m: Optional[float] = None
    alpha: float = 1.0
    tol: Optional[float] = None
    samples: Optional[int] = None
    grid_t: Optional[int] = None
    trials: Optional[int] = None
    seed: Optional[int] = None
    output: Optional[str] = None
    out_path: Optional[str] = None
    op: Optional[str] = None
    lam: Optional[float] = None
    at: List[float] = field(default_factory=list)
    harmonic: bool = False
    check: bool = False

    def with_defaults(self) -> "RunConfig":
        """Fill unset numeric and output fields from the settings singleton"""
        config = get_config()
        return replace(
            self,
            tol=config.get("numerics.tol") if self.tol is None else self.tol,
            samples=config.get("numerics.samples") if self.samples is None else self.samples,
            grid_t=config.get("numerics.grid_t") if self.grid_t is None else self.grid_t,
            trials=config.get("numerics.trials") if self.trials is None else self.trials,
            seed=config.get("numerics.seed") if self.seed is None else self.seed,
            output=config.get("output.format") if self.output is None else self.output,
        )

    def interval(self, name: str) -> Optional[Interval]:
        """Return a pair-valued field as an Interval"""
        pair = getattr(self, name)
        return None if pair is None else Interval(*pair)

    def require(self, name: str) -> Any:
        """Return a field, raising ConfigError naming it when unset"""
        value = getattr(self, name)
        if value is None:
            raise ConfigError(name, f"required for command '{self.command.value}'")
        return value

    def required_fields(self) -> List[str]:
        """Fields that must be present for this command"""
        command = self.command
        if command is Command.CHECK_FN:
            return ["f", "domain", "m"]
        if command is Command.CHECK_SVF:
            endpoints = ["f", "set"] if self.f is not None else ["f1", "f2"]
            return endpoints + ["domain", "m"]
        if command is Command.CHECK_SET:
            return ["set", "m"]
        if command is Command.STARSHAPED:
            return ["set"]
        if command is Command.INTEGRATE:
            return (["f"] if self.f is not None else ["f1", "f2"]) + ["domain"]
        if command is Command.HH:
            return ["f1", "f2", "domain", "m"]
        if command is Command.HH_SCALAR:
            return ["f", "domain", "m"]
        required = ["op", "f1", "f2", "g1", "g2", "domain"]
        if self.op == "combo":
            required.append("lam")
        if self.check:
            required.append("m")
        return required

    def validate(self, deferred: Iterable[str] = ()) -> "RunConfig":
        """
        Check presence and ranges of fields

        Args:
            deferred: Required fields the caller resolves later via require()

        Returns:
            self, for chaining
        """
        skip = set(deferred)
        for name in self.required_fields():
            if name not in skip:
                self.require(name)

        if self.m is not None and not 0 < self.m <= 1:
            raise ConfigError("m", f"must satisfy 0 < m <= 1, got {self.m}")
        if not 0 <= self.alpha <= 1:
            raise ConfigError("alpha", f"must satisfy 0 <= alpha <= 1, got {self.alpha}")
        if self.tol is not None and self.tol < 0:
            raise ConfigError("tol", f"must be non-negative, got {self.tol}")
        if self.samples is not None and self.samples < 2:
            raise ConfigError("samples", f"must be at least 2, got {self.samples}")
        if self.grid_t is not None and self.grid_t < 3:
            raise ConfigError("grid_t", f"must be at least 3, got {self.grid_t}")
        if self.trials is not None and self.trials < 0:
            raise ConfigError("trials", f"must be non-negative, got {self.trials}")
        if self.seed is not None and self.seed < 0:
            raise ConfigError("seed", f"must be unsigned, got {self.seed}")
        if self.output is not None and self.output not in ("json", "text"):
            raise ConfigError("output", f"must be 'json' or 'text', got {self.output!r}")
        if self.op is not None and self.op not in OPS:
            raise ConfigError("op", f"must be one of {', '.join(OPS)}, got {self.op!r}")

        for name in ("domain", "ab"):
            pair = getattr(self, name)
            if pair is not None:
                a, b = pair
                if not a < b:
                    raise ConfigError(name, f"requires a < b, got {a}:{b}")
                if not a > 0:
                    raise ConfigError(name, f"requires a > 0, got {a}:{b}")
        for name in ("set", "set_a", "set_b"):
            pair = getattr(self, name)
            if pair is not None and pair[0] > pair[1]:
                raise ConfigError(name, f"requires lo <= hi, got {pair[0]}:{pair[1]}")
        return self


def parse_decimal(text: str, name: str = "value", line: Optional[int] = None, column: int = 1) -> float:
    """
    Parse a plain decimal literal

    Args:
        text: Literal such as '1', '-0.5' or '2.5e-3'
        name: Field reported on failure
        line: Line number reported on failure
        column: Column of text's first character, for positions

    Returns:
        The float value
    """
    stripped = text.strip()
    lead = len(text) - len(text.lstrip())
    match = _DECIMAL_RE.match(stripped)
    if match is None or match.end() != len(stripped):
        offset = match.end() if match is not None else 0
        raise ConfigError(
            name,
            f"malformed number {stripped!r}",
            line=line,
            position=column + lead + offset,
        )
    value = float(stripped)
    if not math.isfinite(value):
        raise ConfigError(name, f"number out of range {stripped!r}", line=line, position=column + lead)
    return value


def parse_pair(text: str, name: str = "domain", line: Optional[int] = None, column: int = 1) -> Pair:
    """Parse 'a:b' into a pair of decimals"""
    parts = text.split(":")
    if len(parts) != 2:
        raise ConfigError(name, f"expected 'a:b', got {text.strip()!r}", line=line, position=column)
    first = parse_decimal(parts[0], name, line, column)
    second = parse_decimal(parts[1], name, line, column + len(parts[0]) + 1)
    return first, second


def _parse_unsigned(text: str, name: str, line: Optional[int], column: int) -> int:
    stripped = text.strip()
    if not _UNSIGNED_RE.fullmatch(stripped):
        raise ConfigError(name, f"expected an unsigned integer, got {stripped!r}", line=line, position=column)
    return int(stripped)


def _parse_bool(text: str, name: str, line: Optional[int], column: int) -> bool:
    key = text.strip().lower()
    if key not in _BOOLEANS:
        raise ConfigError(name, f"expected true or false, got {text.strip()!r}", line=line, position=column)
    return _BOOLEANS[key]


def _parse_points(text: str, name: str, line: Optional[int], column: int) -> List[float]:
    points = []
    offset = 0
    for part in text.split(","):
        points.append(parse_decimal(part, name, line, column + offset))
        offset += len(part) + 1
    return points


def _parse_command(text: str, name: str, line: Optional[int], column: int) -> Command:
    try:
        return Command(text.strip())
    except ValueError:
        choices = ", ".join(c.value for c in Command)
        raise ConfigError(name, f"unknown command {text.strip()!r} (one of {choices})", line=line, position=column)


def _parse_text(text: str, name: str, line: Optional[int], column: int) -> str:
    stripped = text.strip()
    if len(stripped) >= 2 and stripped[0] == stripped[-1] and stripped[0] in "\"'":
        return stripped[1:-1]
    return stripped


_PARSERS: Dict[str, Callable[[str, str, Optional[int], int], Any]] = {
    "command": _parse_command,
    "f": _parse_text,
    "f1": _parse_text,
    "f2": _parse_text,
    "g1": _parse_text,
    "g2": _parse_text,
    "domain": parse_pair,
    "set": parse_pair,
    "set_a": parse_pair,
    "set_b": parse_pair,
    "ab": parse_pair,
    "m": parse_decimal,
    "alpha": parse_decimal,
    "tol": parse_decimal,
    "lam": parse_decimal,
    "samples": _parse_unsigned,
    "grid_t": _parse_unsigned,
    "trials": _parse_unsigned,
    "seed": _parse_unsigned,
    "output": _parse_text,
    "out_path": _parse_text,
    "op": _parse_text,
    "at": _parse_points,
    "harmonic": _parse_bool,
    "check": _parse_bool,
}


def read_config_file(path: str) -> Dict[str, Any]:
    """
    Read a key=value file into typed values

    Keys may use '-' or '_'; a '#' starts a comment.
    """
    file_path = Path(path)
    try:
        text = file_path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise ConfigError("config", f"file not found: {path}")
    except UnicodeDecodeError:
        raise ConfigError("config", f"file is not valid UTF-8: {path}")
    except OSError as e:
        raise ConfigError("config", f"cannot read {path}: {e.strerror}")

    values: Dict[str, Any] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        if not content.strip():
            continue
        if "=" not in content:
            raise ConfigError("config", "expected key=value", line=number, position=1)
        key_text, value_text = content.split("=", 1)
        key = key_text.strip().replace("-", "_")
        if key not in _PARSERS:
            raise ConfigError(key, "unknown field", line=number, position=1)
        column = len(key_text) + 2
        values[key] = _PARSERS[key](value_text, key, number, column)
    return values


def load_config(
    path: Optional[str],
    overrides: Optional[Dict[str, Any]] = None,
    deferred: Iterable[str] = (),
) -> RunConfig:
    """
    Build a validated RunConfig

    Args:
        path: Optional config file; None uses only the overrides
        overrides: Values from command-line flags; None entries are ignored
        deferred: Required fields that the caller checks later

    Returns:
        RunConfig with defaults filled in
    """
    values: Dict[str, Any] = read_config_file(path) if path else {}
    for key, value in (overrides or {}).items():
        if value is None or (key == "at" and not value):
            continue
        if key in ("harmonic", "check") and value is False:
            continue
        values[key] = value

    if "command" not in values:
        raise ConfigError("command", "missing")
    if isinstance(values["command"], str):
        values["command"] = _parse_command(values["command"], "command", None, 1)

    known = {f.name for f in fields(RunConfig)}
    unknown = set(values) - known
    if unknown:
        raise ConfigError(sorted(unknown)[0], "unknown field")

    run_config = RunConfig(**values).with_defaults()
    return run_config.validate(deferred)
