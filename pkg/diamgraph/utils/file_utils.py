"""File utility functions for diamgraph"""

from pathlib import Path

from .exceptions import InvalidInputError

def write_file(path: Path, content: str) -> None:
    """Write content to a file, creating parent directories"""
    ensure_path_exists(path.parent)
    path.write_text(content)

def read_file(path: Path) -> str:
    """Read a non-empty input file

    Raises:
        InvalidInputError: If the file is missing, unreadable or empty
    """
    try:
        content = path.read_text()
    except OSError as e:
        raise InvalidInputError(f"Cannot read {path}: {e}")
    if not content.strip():
        raise InvalidInputError(f"Input file {path} is empty")
    return content

def ensure_path_exists(path: Path) -> None:
    """Create directory if it doesn't exist"""
    path.mkdir(parents=True, exist_ok=True)
