"""Helpers shared by the command implementations."""
from pathlib import Path
from typing import Any, Dict

from ...core import config
from ...core.geometry import PointSet
from ...core.version import get_version
from ...utils import file_utils, serialization

# Parsed-argument names that map onto global config keys
CONFIG_FLAGS = {
    "epsilon": "epsilon",
    "seed": "seed",
    "threads": "threads",
    "steps": "anneal_steps",
    "anneal_steps": "anneal_steps",
    "samples": "hull_samples",
}
_NOT_PARAMS = {"func", "command", "verbose", "output", "config_command"}


def run_config(args) -> config.RunConfig:
    """Resolve the RunConfig of a parsed command line."""
    overrides: Dict[str, Any] = {}
    for name, value in vars(args).items():
        if name in _NOT_PARAMS or callable(value):
            continue
        key = CONFIG_FLAGS.get(name, name)
        overrides[key] = str(value) if isinstance(value, Path) else value
    return config.resolve_run_config(args.command, overrides)


def version() -> str:
    return f"diamgraph {get_version()}"


def load_pointset(path: str) -> PointSet:
    """Read a PointSet JSON file."""
    return serialization.load_pointset(file_utils.read_file(Path(path)))


def write_output(args, text: str) -> None:
    """Write to --output when given, else to stdout."""
    output = getattr(args, 'output', None)
    if output:
        file_utils.write_file(Path(output), text)
        print(f"Wrote {output}")
    else:
        print(text, end='')
