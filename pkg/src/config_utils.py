"""
Configuration utilities for quif5
Loads config/config.yaml over built-in defaults
"""

import copy
import logging
import pathlib
from typing import Any, Dict, Optional, Union

import yaml

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = pathlib.Path(__file__).parent.parent / "config" / "config.yaml"

DEFAULTS: Dict[str, Any] = {
    "algebra": {"degree_cap": 64},
    "oracle": {"max_dim": 512},
    "f5": {"keep_witnesses": False, "check_invariants": False},
    "bench": {"count": 200, "seed": 0, "csv": None, "zero_reduction_threshold": 0.8},
    "logging": {"level": "INFO", "file": None},
    "output": {"schema_version": 1},
}


def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    """Deep-merge override into a copy of base"""
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def load_config(path: Union[str, pathlib.Path, None] = None) -> Dict[str, Any]:
    """Load the YAML config, falling back to defaults for anything missing or broken"""
    path = pathlib.Path(path) if path else DEFAULT_CONFIG_PATH
    try:
        with open(path, "r") as f:
            data = yaml.safe_load(f) or {}
        if not isinstance(data, dict):
            raise ValueError("top level must be a mapping")
        return _merge(DEFAULTS, data)
    except FileNotFoundError:
        logger.debug(f"no config at {path}, using defaults")
        return copy.deepcopy(DEFAULTS)
    except Exception as e:
        logger.error(f"❌ Failed to load config {path}: {e}")
        return copy.deepcopy(DEFAULTS)


def get_setting(config: Dict[str, Any], dotted: str, default: Optional[Any] = None) -> Any:
    """Look up 'a.b.c' in a nested config"""
    node: Any = config
    for part in dotted.split("."):
        if not isinstance(node, dict) or part not in node:
            return default
        node = node[part]
    return node
