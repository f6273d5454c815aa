"""Fixtures for command tests"""
import pytest
from unittest.mock import patch

from diamgraph import constants
from diamgraph.cli.cli import create_parser


@pytest.fixture
def mock_global_config():
    """Fixture to mock global configuration."""
    with patch('diamgraph.core.config.load_global_config') as mock_load_config:
        mock_load_config.return_value = {**constants.DEFAULT_CONFIG, "threads": 1}
        yield mock_load_config

@pytest.fixture
def parse():
    """Parse a command line into the namespace a command receives"""
    def _parse(*argv):
        return create_parser().parse_args([str(a) for a in argv])
    return _parse

@pytest.fixture
def pointset_file(tmp_path):
    """Write a PointSet to a JSON file and return its path"""
    from diamgraph.utils import serialization

    def _write(ps, name="points.json"):
        path = tmp_path / name
        path.write_text(serialization.dump_pointset(ps))
        return path
    return _write
