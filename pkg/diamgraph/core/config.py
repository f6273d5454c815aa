"""Configuration management for diamgraph."""
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

from .. import constants
from ..utils.exceptions import ConfigValidationError


def init_paths(base_path: Optional[Path] = None) -> None:
    """Initialize global paths for diamgraph.

    Args:
        base_path: Optional custom base path. If None, uses ~/.config/diamgraph

    Raises:
        ValueError: If base_path cannot be created
    """
    if base_path is not None and not (base_path.exists() or base_path.parent.exists()):
        raise ValueError(f"Base path {base_path} does not exist and cannot be created")

    constants.DIAMGRAPH_HOME = base_path or Path.home() / ".config" / "diamgraph"
    constants.DIAMGRAPH_CONFIG_FILE = constants.DIAMGRAPH_HOME / "diamgraph.yaml"

def _ensure_config_dir() -> None:
    """Ensure configuration directory exists.

    Raises:
        RuntimeError: If directory cannot be created
    """
    try:
        constants.DIAMGRAPH_HOME.mkdir(parents=True, exist_ok=True)
    except (OSError, PermissionError) as e:
        raise RuntimeError(f"Failed to create config directory {constants.DIAMGRAPH_HOME}: {e}")

def load_global_config() -> Dict[str, Any]:
    """Load global configuration from YAML file, merging with defaults."""
    default_config = constants.DEFAULT_CONFIG.copy()

    if not constants.DIAMGRAPH_CONFIG_FILE.exists():
        return default_config

    try:
        with open(constants.DIAMGRAPH_CONFIG_FILE, 'r') as f:
            user_config = yaml.safe_load(f) or {}
    except yaml.YAMLError as e:
        raise RuntimeError(f"Failed to load config file {constants.DIAMGRAPH_CONFIG_FILE}: {e}")
    if not isinstance(user_config, dict):
        raise ConfigValidationError(f"Config file {constants.DIAMGRAPH_CONFIG_FILE} must hold a mapping")
    return {**default_config, **user_config}

def save_global_config(config: Dict[str, Any]) -> None:
    """Save global configuration to YAML file.

    Args:
        config: Configuration dictionary to save

    Raises:
        RuntimeError: If config cannot be saved
    """
    _ensure_config_dir()
    try:
        with open(constants.DIAMGRAPH_CONFIG_FILE, 'w') as f:
            yaml.safe_dump(config, f, sort_keys=True)
    except (yaml.YAMLError, OSError) as e:
        raise RuntimeError(f"Failed to save config file {constants.DIAMGRAPH_CONFIG_FILE}: {e}")

def parse_config_value(key: str, raw: str) -> Any:
    """Convert a KEY=VALUE string value to the type of its default.

    Unknown keys are parsed as YAML scalars.

    Raises:
        ConfigValidationError: If the value does not fit the key
    """
    try:
        value = yaml.safe_load(raw)
    except yaml.YAMLError as e:
        raise ConfigValidationError(f"Cannot parse value for '{key}': {e}")
    default = constants.DEFAULT_CONFIG.get(key)
    if default is None or value is None:
        return value
    try:
        if isinstance(default, float):
            return float(value)
        if isinstance(default, int):
            return int(value)
    except (TypeError, ValueError):
        raise ConfigValidationError(f"Value '{raw}' is not valid for '{key}'")
    return value

def resolve_threads(cli_value: Optional[int] = None, global_config: Optional[Dict[str, Any]] = None) -> int:
    """Resolve the sweep worker count: flag, then DIAMGRAPH_THREADS, then config.

    Raises:
        ConfigValidationError: If the environment variable is not a positive integer
    """
    if cli_value is not None:
        threads = cli_value
    elif os.environ.get(constants.THREADS_ENV_VAR):
        raw = os.environ[constants.THREADS_ENV_VAR]
        try:
            threads = int(raw)
        except ValueError:
            raise ConfigValidationError(f"{constants.THREADS_ENV_VAR} must be an integer, got '{raw}'")
    else:
        config = global_config if global_config is not None else load_global_config()
        threads = config.get("threads") or (os.cpu_count() or 1)
    if threads < 1:
        raise ConfigValidationError("Thread count must be at least 1")
    return threads


@dataclass
class RunConfig:
    """Fully resolved settings of one CLI run, stamped into every output."""
    command: str
    epsilon: float
    seed: int
    threads: int
    chromatic_cap: int
    odd_cycle_cap: int
    hull_samples: int
    anneal_steps: int
    params: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "command": self.command,
            "epsilon": self.epsilon,
            "seed": self.seed,
            "threads": self.threads,
            "chromatic_cap": self.chromatic_cap,
            "odd_cycle_cap": self.odd_cycle_cap,
            "hull_samples": self.hull_samples,
            "anneal_steps": self.anneal_steps,
            "params": dict(sorted(self.params.items())),
        }

def resolve_run_config(command: str, overrides: Optional[Dict[str, Any]] = None,
                       global_config: Optional[Dict[str, Any]] = None) -> RunConfig:
    """Merge CLI overrides (None means unset) over the global config.

    Keys that are not config settings are kept as run parameters.

    Raises:
        ConfigValidationError: If epsilon or a cap is out of range
    """
    config = global_config if global_config is not None else load_global_config()
    overrides = {k: v for k, v in (overrides or {}).items() if v is not None}
    merged = {**config, **{k: v for k, v in overrides.items() if k in constants.DEFAULT_CONFIG}}
    params = {k: v for k, v in overrides.items() if k not in constants.DEFAULT_CONFIG}
    try:
        epsilon = float(merged["epsilon"])
        caps = {k: int(merged[k]) for k in ("seed", "chromatic_cap", "odd_cycle_cap", "hull_samples", "anneal_steps")}
    except (TypeError, ValueError) as e:
        raise ConfigValidationError(f"Invalid configuration value: {e}")
    if not 0 <= epsilon <= constants.MAX_EPSILON:
        raise ConfigValidationError(f"epsilon must lie in [0, {constants.MAX_EPSILON}], got {epsilon}")
    if min(caps["chromatic_cap"], caps["odd_cycle_cap"], caps["hull_samples"], caps["anneal_steps"]) < 1:
        raise ConfigValidationError("Caps, hull samples and anneal steps must be positive")
    threads = resolve_threads(overrides.get("threads"), config)
    return RunConfig(command, epsilon, threads=threads, params=params, **caps)
