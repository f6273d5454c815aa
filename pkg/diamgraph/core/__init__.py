"""Core functionality for diamgraph."""

from . import config
from . import geometry
from . import graph
from . import lenz
from . import cover

__all__ = ['config', 'geometry', 'graph', 'lenz', 'cover']
