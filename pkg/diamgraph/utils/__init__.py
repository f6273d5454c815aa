"""Utility functions for diamgraph"""

from . import exceptions
from . import file_utils

__all__ = ['exceptions', 'file_utils']
