"""Test fixtures for diamgraph"""
import math
from unittest.mock import patch

import numpy as np
import pytest
from pathlib import Path

from diamgraph.core.geometry import PointSet
from diamgraph.services import extremal

@pytest.fixture
def test_data_dir():
    """Fixture for test data directory"""
    path = Path(__file__).parent / "test_data"
    path.mkdir(exist_ok=True)
    return path

@pytest.fixture
def runner():
    """Fixture for running CLI commands"""
    class CliRunner:
        def invoke(self, cli, args):
            """Run a CLI command with given arguments"""
            try:
                result = cli(args)
                return result
            except SystemExit as e:
                return e.code
            except Exception as e:
                return e
    return CliRunner()

@pytest.fixture
def mock_constants(tmp_path):
    """Point the global config file at a temporary directory"""
    home = tmp_path / ".config" / "diamgraph"
    with patch('diamgraph.constants.DIAMGRAPH_HOME', home), \
         patch('diamgraph.constants.DIAMGRAPH_CONFIG_FILE', home / "diamgraph.yaml"):
        yield tmp_path

@pytest.fixture
def simplex():
    """Unit regular 4-simplex on S^3_sqrt(2/5)"""
    return extremal.counterexample_borsuk_sqrt25()

@pytest.fixture
def pentagon_star():
    """Regular pentagon with unit diagonals on a small circle of S^3_0.8"""
    r = 0.8
    rho = 1 / (2 * math.sin(2 * math.pi / 5))
    h = math.sqrt(r * r - rho * rho)
    angles = [2 * math.pi * j / 5 for j in range(5)]
    pts = [(rho * math.cos(t), rho * math.sin(t), 0.0, h) for t in angles]
    return PointSet(4, np.array(pts), r)

@pytest.fixture
def bowtie():
    """Two unit triangles sharing a vertex on S^3_1"""
    s = math.sqrt(2) / 2
    pts = [
        (0.0, 0.0, 0.0, 1.0),
        (0.5, 0.0, s, 0.5),
        (-0.5, 0.0, s, 0.5),
        (0.0, 0.5, s, 0.5),
        (0.0, -0.5, s, 0.5),
    ]
    return PointSet(4, np.array(pts), 1.0)
