import json

import pytest

from coxkit.cli import main
from coxkit.presets import PRESETS


@pytest.fixture
def a2_file(tmp_path):
    path = tmp_path / "a2.graph"
    path.write_text(PRESETS["a2"].graph)
    return str(path)


@pytest.fixture
def six_vertex_file(tmp_path):
    path = tmp_path / "six.graph"
    path.write_text(PRESETS["six-vertex-signed"].graph)
    return str(path)


@pytest.fixture
def signed_cycle_file(tmp_path):
    path = tmp_path / "cycle.graph"
    path.write_text(PRESETS["four-cycle-signed"].graph)
    return str(path)


class TestValidate:
    def test_ok(self, capsys, six_vertex_file):
        assert main(["validate", six_vertex_file]) == 0
        out = capsys.readouterr().out
        assert "legal" in out
        assert "all hold exactly" in out

    def test_missing_file(self, capsys):
        assert main(["validate", "/nonexistent.graph"]) == 2

    def test_parse_error_reports_line(self, capsys, tmp_path):
        path = tmp_path / "bad.graph"
        path.write_text("vertices 2\nedge 1 2 w=oops\n")
        assert main(["validate", str(path)]) == 2
        assert "line 2" in capsys.readouterr().err

    def test_json_format(self, capsys, six_vertex_file):
        assert main(["validate", six_vertex_file, "--format", "json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["legal"] is True
        assert data["relations"]["ok"] is True


class TestClassify:
    def test_balanced(self, capsys, six_vertex_file):
        assert main(["classify", six_vertex_file]) == 0
        out = capsys.readouterr().out
        assert "FaithfulBalanced" in out
        assert "(1, -1, 1, -1, -1, -1)" in out

    def test_not_faithful(self, capsys, signed_cycle_file):
        assert main(["classify", signed_cycle_file, "--format", "json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["kind"] == "NotFaithful"
        assert data["quotientOrder"] == 192

    def test_affine(self, capsys, tmp_path):
        path = tmp_path / "affine.graph"
        path.write_text(PRESETS["four-cycle-affine"].graph)
        assert main(["classify", str(path)]) == 0
        assert "FaithfulAffineCycle" in capsys.readouterr().out


class TestGauge:
    def test_balanced(self, capsys, six_vertex_file):
        assert main(["gauge", six_vertex_file]) == 0
        out = capsys.readouterr().out
        assert "(1, -1, 1, -1, -1, -1)" in out

    def test_unbalanced_exits_2(self, capsys, signed_cycle_file):
        assert main(["gauge", signed_cycle_file]) == 2
        assert "not balanced" in capsys.readouterr().out


class TestEnumerate:
    def test_finite_group(self, capsys, a2_file):
        assert main(["enumerate", a2_file, "--format", "json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["closed"] is True and data["order"] == 6

    def test_budget_exhausted(self, capsys, tmp_path):
        path = tmp_path / "inf.graph"
        path.write_text("vertices 2\nedge 1 2 m=inf\n")
        assert main(["enumerate", str(path), "--budget", "40"]) == 0
        assert "did not close" in capsys.readouterr().out


class TestPlay:
    def test_script(self, capsys, a2_file, tmp_path):
        script = tmp_path / "moves.txt"
        script.write_text("fire 1\nfire 2\nfire 1\n")
        assert main(["play", a2_file, "--script", str(script)]) == 0
        out = capsys.readouterr().out
        assert "final position: (-1, -1)" in out
        assert "descent set: [1, 2]" in out
        assert "reduced: True" in out

    def test_empty_script_echoes_unit(self, capsys, a2_file):
        assert main(["play", a2_file]) == 0
        assert "final position: (1, 1)" in capsys.readouterr().out

    def test_bad_vertex(self, capsys, a2_file, tmp_path):
        script = tmp_path / "moves.txt"
        script.write_text("fire 7\n")
        assert main(["play", a2_file, "--script", str(script)]) == 2

    def test_generalized_refused_on_unbalanced(self, capsys, signed_cycle_file, tmp_path):
        script = tmp_path / "moves.txt"
        script.write_text("fire 1\n")
        code = main(["play", signed_cycle_file, "--mode", "generalized",
                     "--script", str(script)])
        assert code == 2
        assert "refused" in capsys.readouterr().err

    def test_generalized_play_on_balanced(self, capsys, six_vertex_file, tmp_path):
        script = tmp_path / "moves.txt"
        script.write_text("fire 1\nfire 2\n")
        assert main(["play", six_vertex_file, "--script", str(script),
                     "--format", "json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["moves"][0]["class"] == "pseudo-positive"
        assert data["reduced"] is True

    def test_json_trajectory_has_exact_and_approx(self, capsys, a2_file, tmp_path):
        script = tmp_path / "moves.txt"
        script.write_text("fire 1\n")
        assert main(["play", a2_file, "--script", str(script), "--format", "json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["positions"][0]["exact"] == ["-1", "2"]
        assert data["positions"][0]["approx"] == ["-1.000000", "2.000000"]


class TestImo:
    def test_single_start(self, capsys):
        assert main(["imo", "--start=-1,2,2,2,2"]) == 0
        out = capsys.readouterr().out
        assert "terminated: True after 1 steps" in out

    def test_sweep(self, capsys):
        assert main(["imo", "--runs", "50", "--seed", "3", "--format", "json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["runs"] == 50


class TestPresets:
    def test_list(self, capsys):
        assert main(["presets"]) == 0
        out = capsys.readouterr().out
        for name in ("a2", "s4-chain", "six-vertex-signed", "four-cycle-signed",
                     "four-cycle-affine", "imo-pentagon"):
            assert name in out

    def test_print_one_parses(self, capsys):
        assert main(["presets", "six-vertex-signed"]) == 0
        from coxkit import parse_graph
        graph, f = parse_graph(capsys.readouterr().out)
        assert graph.n == 6

    def test_unknown(self, capsys):
        assert main(["presets", "nope"]) == 2
