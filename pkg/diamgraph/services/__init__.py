"""Service layer for diamgraph: verification suites, search and sweeps."""
from . import extremal
from . import search
from . import sweeps

__all__ = ['extremal', 'search', 'sweeps']
