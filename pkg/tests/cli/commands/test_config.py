"""Tests for the config commands"""
import pytest
import yaml

from diamgraph import constants
from diamgraph.cli.commands.config import handle_set_command, print_config_command
from diamgraph.utils.exceptions import ConfigValidationError, InvalidInputError


def test_config_set(mock_constants, parse, capsys):
    """Test typed values are saved"""
    handle_set_command(parse("config", "set", "epsilon=1e-7", "seed=3"))
    assert "Updated 2 global config keys." in capsys.readouterr().out
    saved = yaml.safe_load(constants.DIAMGRAPH_CONFIG_FILE.read_text())
    assert saved["epsilon"] == 1e-7 and saved["seed"] == 3

def test_config_set_unknown_key(mock_constants, parse, capsys):
    """Test non-standard keys are saved with a warning"""
    handle_set_command(parse("config", "set", "colour=blue"))
    assert "Warning: Key 'colour'" in capsys.readouterr().out

def test_config_set_malformed(mock_constants, parse):
    """Test pairs without '=' and untyped values"""
    with pytest.raises(InvalidInputError):
        handle_set_command(parse("config", "set", "seed"))
    with pytest.raises(ConfigValidationError):
        handle_set_command(parse("config", "set", "hull_samples=lots"))

def test_config_show(mock_constants, parse, capsys):
    """Test the merged config is printed"""
    handle_set_command(parse("config", "set", "seed=9"))
    print_config_command(parse("config", "show"))
    out = capsys.readouterr().out
    assert "seed: 9" in out
    assert "hull_samples: 100" in out
