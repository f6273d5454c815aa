"""End-to-end tests of the CLI through files"""
import json

import pytest

from diamgraph.cli.cli import main
from diamgraph.utils import serialization


@pytest.fixture
def run(runner, mock_constants, monkeypatch):
    """Run main with an isolated global config and one worker thread"""
    monkeypatch.setenv("DIAMGRAPH_THREADS", "1")
    return lambda *argv: runner.invoke(main, [str(a) for a in argv])

def test_formula_row(run, capsys):
    """Test the n = 8 row of the formula table"""
    assert run("formula", "--n-min", 8, "--n-max", 8) == 0
    assert capsys.readouterr().out.splitlines()[-1] == "8,16,21,20,24"

def test_formula_bad_range(run, capsys):
    """Test a range below 5 exits with 2"""
    assert run("formula", "--n-min", 4, "--n-max", 8) == 2
    assert "Error:" in capsys.readouterr().err

def test_gen_then_analyze(run, tmp_path, capsys):
    """Test a generated file analyzes to the expected clique counts"""
    simplex = tmp_path / "simplex.json"
    assert run("gen", "simplex", "-o", simplex) == 0
    assert run("analyze", "--input", simplex) == 0
    out = capsys.readouterr().out
    data = json.loads(out[out.index("{"):])
    assert data["counts"] == {"2": 10, "3": 10, "4": 5, "5": 1}

def test_gen_is_byte_identical(run, tmp_path):
    """Test two runs with the same flags write identical files"""
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    assert run("gen", "lenz-triangles", "--n", 9, "-o", first) == 0
    assert run("gen", "lenz-triangles", "--n", 9, "-o", second) == 0
    assert first.read_bytes() == second.read_bytes()

def test_verify_schur_simplex(run, tmp_path):
    """Test the simplex passes the Schur suite"""
    simplex = tmp_path / "simplex.json"
    run("gen", "simplex", "-o", simplex)
    assert run("verify", "schur", "--input", simplex, "-o", tmp_path / "report.json") == 0
    report = json.loads((tmp_path / "report.json").read_text())
    assert report["summary"]["failed"] == 0

def test_verify_failure_exit_code(run):
    """Test a failed claim exits with 1"""
    assert run("verify", "kst", "--n", 10, "--trials", 1) == 1

def test_cover_exit_codes(run, tmp_path, pentagon_star):
    """Test the cover command on a good and a precondition-violating input"""
    pentagon = tmp_path / "pentagon.json"
    pentagon.write_text(serialization.dump_pointset(pentagon_star))
    assert run("cover", "--input", pentagon, "-o", tmp_path / "cover.json") == 0
    assert json.loads((tmp_path / "cover.json").read_text())["planar_ok"] is True
    kmm = tmp_path / "kmm.json"
    assert run("gen", "kmm", "--m", 4, "-o", kmm) == 0
    assert run("cover", "--input", kmm) == 3

def test_analyze_missing_and_empty_input(run, tmp_path):
    """Test missing and empty inputs exit with 2"""
    assert run("analyze", "--input", tmp_path / "missing.json") == 2
    empty = tmp_path / "empty.json"
    empty.write_text("")
    assert run("analyze", "--input", empty) == 2

def test_config_set_and_show(run, capsys):
    """Test config round trip through the CLI"""
    assert run("config", "set", "seed=5") == 0
    assert run("config", "show") == 0
    assert "seed: 5" in capsys.readouterr().out

def test_usage_errors(run):
    """Test argparse errors exit with 2"""
    assert run("gen", "unknown-kind") == 2
    assert run("analyze") == 2
