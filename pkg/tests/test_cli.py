"""Tests for the command line front end: output and exit codes"""

import json

import pytest

from src.instances import A1_TEXT
from src.main import main


@pytest.fixture
def a1_file(tmp_path):
    path = tmp_path / "a1.qv"
    path.write_text(A1_TEXT)
    return str(path)


def _write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def _json(capsys):
    return json.loads(capsys.readouterr().out)


def test_algebra_text(a1_file, capsys):
    assert main(["algebra", a1_file]) == 0
    out = capsys.readouterr().out
    assert "dim 3" in out
    assert "id(v), x, x*x" in out


def test_loewy_json(a1_file, capsys):
    assert main(["loewy", a1_file, "--json", "--oracle-check"]) == 0
    doc = _json(capsys)
    assert doc["schema_version"] == 1
    assert doc["command"] == "loewy"
    assert doc["loewy_dims"] == [1, 1]
    assert doc["minimal_generators"] == ["m1*x"]


def test_f5_json(a1_file, capsys):
    assert main(["f5", a1_file, "--json", "--oracle-check"]) == 0
    doc = _json(capsys)
    assert [g["signature"] for g in doc["basis"]] == ["e1*id(v)"]
    assert doc["syzygy_signatures"] == ["e1*x*x"]
    assert doc["stats"]["zero_reductions"] == 1


def test_stdbasis_json(a1_file, capsys):
    assert main(["stdbasis", a1_file, "--json", "--oracle-check"]) == 0
    doc = _json(capsys)
    assert doc["basis"] == ["m1*x"]
    assert doc["stats"]["topplings_processed"] == 1


def test_mingens(a1_file, capsys):
    assert main(["mingens", a1_file, "--json", "--oracle-check"]) == 0
    assert _json(capsys)["count"] == 1


def test_oracle(a1_file, capsys):
    assert main(["oracle", a1_file, "--json"]) == 0
    doc = _json(capsys)
    assert doc["dim"] == 2
    assert doc["pivots"] == ["m1*x", "m1*x*x"]
    assert doc["radical_dims"] == [2, 1, 0]


def test_parse_error(tmp_path):
    assert main(["algebra", _write(tmp_path, "bad.qv", "field 2\nquiver {")]) == 2


def test_semantic_error(tmp_path):
    text = "field 2\nquiver { vertex v arrow x v v }\nrelations { x*y }\n"
    assert main(["algebra", _write(tmp_path, "bad.qv", text)]) == 3


def test_not_basic(tmp_path, capsys):
    text = "field 2\nquiver { vertex v arrow x v v }\nrelations { x }\n"
    assert main(["algebra", _write(tmp_path, "bad.qv", text)]) == 4
    assert "degree" in capsys.readouterr().err


def test_loewy_needs_negdeglex(tmp_path):
    path = _write(tmp_path, "deglex.qv", A1_TEXT.replace("order negdeglex", "order deglex"))
    assert main(["loewy", path]) == 4


def test_f5_needs_a_module(tmp_path):
    text = "field 2\nquiver { vertex v arrow x v v }\nrelations { x*x }\n"
    assert main(["f5", _write(tmp_path, "alg.qv", text)]) == 3


@pytest.mark.parametrize("argv", [
    [],
    ["frobnicate"],
    ["algebra"],
    ["algebra", "/nonexistent/problem.qv"],
    ["bench", "--count", "many"],
])
def test_usage_errors(argv):
    assert main(argv) == 1


def test_bad_log_level(a1_file):
    assert main(["algebra", a1_file, "--log-level", "LOUD"]) == 1


def test_config_file(a1_file, tmp_path, capsys):
    config = _write(tmp_path, "config.yaml", "f5:\n  keep_witnesses: true\noutput:\n  schema_version: 7\n")
    assert main(["f5", a1_file, "--json", "--config", config]) == 0
    assert _json(capsys)["schema_version"] == 7


def test_bench(tmp_path, capsys):
    csv_path = tmp_path / "bench.csv"
    assert main(["bench", "--count", "3", "--seed", "1", "--json", "--csv", str(csv_path)]) == 0
    doc = _json(capsys)
    assert doc["count"] == 3
    assert doc["oracle_failures"] == 0
    assert "_table" not in doc
    assert len(csv_path.read_text().strip().splitlines()) == 4
