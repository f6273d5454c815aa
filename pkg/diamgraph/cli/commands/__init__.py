"""Command implementations for diamgraph CLI."""

from .formula import formula_command
from .gen import gen_command
from .analyze import analyze_command
from .verify import verify_command
from .search import search_command
from .cover import cover_command
from .config import handle_set_command, print_config_command

__all__ = [
    'formula_command',
    'gen_command',
    'analyze_command',
    'verify_command',
    'search_command',
    'cover_command',
    'handle_set_command',
    'print_config_command',
]
