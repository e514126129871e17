"""
Configuration module for harmonica
"""

from .settings import Config, get_config, reset_config
from .run_config import RunConfig, Command, load_config

__all__ = ["Config", "get_config", "reset_config", "RunConfig", "Command", "load_config"]
