"""
Configuration management for harmonica
Loads environment variables and provides centralized numeric defaults
"""

import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, Optional
from dotenv import load_dotenv

from src.core.errors import ConfigError

# Load environment variables
env_path = Path(__file__).parent.parent.parent / '.env'
load_dotenv(dotenv_path=env_path)

@dataclass
class NumericsConfig:
    """Tolerances, sampling sizes and budgets"""
    tol: float = 1e-9
    samples: int = 33
    grid_t: int = 17
    trials: int = 256
    seed: int = 0
    
    # Construction-time validation of interval functions
    validation_samples: int = 257
    tabulation_points: int = 1025
    
    # Quadrature
    quad_tol: float = 1e-10
    max_evaluations: int = 2 ** 20
    min_panels: int = 4
    
    # Relative slack when testing a computed point against a domain
    domain_slack: float = 1e-12
    coverage_warning_ratio: float = 0.5

@dataclass
class SystemConfig:
    """System-level configuration"""
    log_level: str = "WARNING"
    log_file: Optional[Path] = None

@dataclass
class OutputConfig:
    """Report output configuration"""
    format: str = "json"
    json_indent: int = 2
    float_digits: int = 17

@dataclass
class Config:
    """Main configuration container"""
    numerics: NumericsConfig
    system: SystemConfig
    output: OutputConfig
    
    # Runtime overrides
    _overrides: Dict[str, Any] = field(default_factory=dict)
    
    def override(self, key: str, value: Any):
        """Override a configuration value at runtime"""
        self._overrides[key] = value
    
    def get(self, key: str, default=None):
        """Get configuration value with override support"""
        if key in self._overrides:
            return self._overrides[key]
        
        # Navigate nested attributes
        parts = key.split('.')
        obj = self
        for part in parts:
            if hasattr(obj, part):
                obj = getattr(obj, part)
            else:
                return default
        return obj

# Singleton instance
_config_instance: Optional[Config] = None

def _env(name: str, default: str, convert: Callable[[str], Any]) -> Any:
    """Read and convert an environment variable, naming it on failure"""
    raw = os.getenv(name, default)
    try:
        return convert(raw)
    except ValueError:
        raise ConfigError(name, f"cannot interpret {raw!r}")

def _unsigned(raw: str) -> int:
    value = int(raw)
    if value < 0:
        raise ValueError(raw)
    return value

def get_config() -> Config:
    """Get or create the configuration singleton"""
    global _config_instance
    
    if _config_instance is None:
        # Load from environment
        numerics_config = NumericsConfig(
            tol=_env("HARMONICA_TOL", "1e-9", float),
            samples=_env("HARMONICA_SAMPLES", "33", int),
            grid_t=_env("HARMONICA_GRID_T", "17", int),
            trials=_env("HARMONICA_TRIALS", "256", int),
            seed=_env("HARMONICA_SEED", "0", _unsigned),
            quad_tol=_env("HARMONICA_QUAD_TOL", "1e-10", float),
            max_evaluations=_env("HARMONICA_MAX_EVALUATIONS", str(2 ** 20), int)
        )
        
        log_file = os.getenv("HARMONICA_LOG_FILE")
        system_config = SystemConfig(
            log_level=os.getenv("HARMONICA_LOG_LEVEL", "WARNING"),
            log_file=Path(log_file) if log_file else None
        )
        
        output_config = OutputConfig(
            format=os.getenv("HARMONICA_OUTPUT", "json")
        )
        if output_config.format not in ("json", "text"):
            raise ConfigError("HARMONICA_OUTPUT", "must be 'json' or 'text'")
        
        _config_instance = Config(
            numerics=numerics_config,
            system=system_config,
            output=output_config
        )
    
    return _config_instance

def reset_config():
    """Reset the configuration singleton (mainly for testing)"""
    global _config_instance
    _config_instance = None
