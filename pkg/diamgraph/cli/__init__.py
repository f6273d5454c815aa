"""Command-line interface module for diamgraph."""
from .cli import main
from . import commands

__all__ = ['main', 'commands']
