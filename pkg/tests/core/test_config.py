"""Tests for configuration management"""
import os

import pytest
from pathlib import Path
import yaml
from unittest.mock import patch

from diamgraph.core import config
from diamgraph import constants
from diamgraph.utils.exceptions import ConfigValidationError

pytestmark = pytest.mark.core


def test_init_paths_default(mock_constants):
    """Test init_paths with default path"""
    constants.DIAMGRAPH_HOME = None
    constants.DIAMGRAPH_CONFIG_FILE = None

    config.init_paths()

    assert constants.DIAMGRAPH_HOME == Path.home() / ".config" / "diamgraph"
    assert constants.DIAMGRAPH_CONFIG_FILE == Path.home() / ".config" / "diamgraph" / "diamgraph.yaml"

def test_init_paths_custom(mock_constants):
    """Test init_paths with custom base path"""
    custom_path = mock_constants / "custom_diamgraph"
    config.init_paths(custom_path)

    assert constants.DIAMGRAPH_HOME == custom_path
    assert constants.DIAMGRAPH_CONFIG_FILE == custom_path / "diamgraph.yaml"

def test_init_paths_unreachable(mock_constants):
    """Test a base path whose parent is missing"""
    with pytest.raises(ValueError):
        config.init_paths(mock_constants / "missing" / "deeper")

def test_load_global_config_default(mock_constants):
    """Test loading global config when file does not exist"""
    assert config.load_global_config() == constants.DEFAULT_CONFIG

def test_load_global_config_existing(mock_constants):
    """Test loading existing global config"""
    config_path = constants.DIAMGRAPH_CONFIG_FILE
    config_path.parent.mkdir(parents=True, exist_ok=True)
    existing_config = {"epsilon": 1e-6, "new_key": "value"}
    with open(config_path, 'w') as f:
        yaml.dump(existing_config, f)

    global_config = config.load_global_config()
    assert global_config == {**constants.DEFAULT_CONFIG, **existing_config}

def test_load_global_config_not_a_mapping(mock_constants):
    """Test a config file holding a list is rejected"""
    config_path = constants.DIAMGRAPH_CONFIG_FILE
    config_path.parent.mkdir(parents=True, exist_ok=True)
    config_path.write_text("- 1\n- 2\n")
    with pytest.raises(ConfigValidationError):
        config.load_global_config()

def test_save_global_config(mock_constants):
    """Test saving global config"""
    new_config = {"seed": 7, "another_key": 123}

    config.save_global_config(new_config)

    with open(constants.DIAMGRAPH_CONFIG_FILE, 'r') as f:
        assert yaml.safe_load(f) == new_config

def test_parse_config_value():
    """Test values take the type of their default"""
    assert config.parse_config_value("epsilon", "1e-6") == 1e-6
    assert config.parse_config_value("seed", "12") == 12
    assert config.parse_config_value("threads", "4") == 4
    assert config.parse_config_value("custom", "abc") == "abc"
    with pytest.raises(ConfigValidationError):
        config.parse_config_value("chromatic_cap", "many")

def test_resolve_threads_precedence(mock_constants):
    """Test flag, then environment, then config"""
    with patch.dict(os.environ, {constants.THREADS_ENV_VAR: "3"}):
        assert config.resolve_threads(5, {"threads": 2}) == 5
        assert config.resolve_threads(None, {"threads": 2}) == 3
    with patch.dict(os.environ, {constants.THREADS_ENV_VAR: ""}):
        assert config.resolve_threads(None, {"threads": 2}) == 2

def test_resolve_threads_defaults_to_cpu_count(mock_constants):
    """Test an unset thread count falls back to the CPU count"""
    with patch.dict(os.environ, {constants.THREADS_ENV_VAR: ""}), \
         patch('diamgraph.core.config.os.cpu_count', return_value=6):
        assert config.resolve_threads(None, {"threads": None}) == 6

def test_resolve_threads_invalid():
    """Test malformed and non-positive thread counts"""
    with patch.dict(os.environ, {constants.THREADS_ENV_VAR: "many"}):
        with pytest.raises(ConfigValidationError):
            config.resolve_threads(None, {})
    with pytest.raises(ConfigValidationError):
        config.resolve_threads(0, {})

def test_resolve_run_config_merges_overrides(mock_constants):
    """Test overrides win and unknown keys become parameters"""
    run = config.resolve_run_config("verify", {"epsilon": 1e-7, "threads": 2, "seed": None, "suite": "schur"})
    assert run.epsilon == 1e-7
    assert run.seed == 0
    assert run.threads == 2
    assert run.params == {"suite": "schur"}
    assert run.to_dict()["command"] == "verify"
    assert run.to_dict()["params"] == {"suite": "schur"}

def test_resolve_run_config_reads_global_config(mock_constants):
    """Test saved settings are picked up"""
    config.save_global_config({"seed": 11, "hull_samples": 40})
    run = config.resolve_run_config("cover", {"threads": 1})
    assert run.seed == 11 and run.hull_samples == 40

def test_resolve_run_config_validation(mock_constants):
    """Test epsilon and cap ranges"""
    with pytest.raises(ConfigValidationError):
        config.resolve_run_config("analyze", {"epsilon": 0.01, "threads": 1})
    with pytest.raises(ConfigValidationError):
        config.resolve_run_config("analyze", {"chromatic_cap": 0, "threads": 1})
    with pytest.raises(ConfigValidationError):
        config.resolve_run_config("analyze", {"threads": 1}, {**constants.DEFAULT_CONFIG, "seed": "x"})
