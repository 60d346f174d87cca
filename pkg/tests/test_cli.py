"""CLI contract: exit codes, output shapes, determinism."""
import json
import os
import subprocess
import sys

import pytest

from aspec.cli import main

DATA = os.path.join(os.path.dirname(__file__), "data", "unicyclic26.edges")


def run(capsys, *argv):
    code = main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


@pytest.fixture
def p4_file(tmp_path):
    p = tmp_path / "p4.edges"
    p.write_text("4\n1 2\n2 3\n3 4\n")
    return str(p)


@pytest.fixture
def rooted_file(tmp_path):
    p = tmp_path / "h.edges"
    p.write_text("3\n1 2\n2 3\n")
    return str(p)


class TestSpectrum:
    def test_cycle_structured_json(self, capsys):
        code, out, err = run(
            capsys, "spectrum", "--cycle", "3", "--bethe", "d=2,k=2", "--alpha", "0"
        )
        assert code == 0 and err == ""
        payload = json.loads(out)
        assert payload["command"] == "spectrum"
        assert payload["path"] == "cycle-closed-form"
        assert payload["attachment"] == {
            "kind": "spec", "k": 2, "degrees": [1, 2], "counts": [2, 1],
        }
        (res,) = payload["results"]
        assert res["alpha"] == 0.0
        assert "spectral_radius" in res
        total = sum(m for _, m in res["spectrum"])
        assert total == 9

    def test_graph_base_structured(self, capsys, p4_file):
        code, out, _ = run(
            capsys, "spectrum", "--graph", p4_file, "--bethe", "d=2,k=2", "--alpha", "0.5"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["path"] == "structured"
        assert payload["base"] == {"kind": "graph", "order": 4}
        total = sum(m for _, m in payload["results"][0]["spectrum"])
        assert total == 12

    def test_general_rooted(self, capsys, p4_file, rooted_file):
        code, out, _ = run(
            capsys, "spectrum", "--graph", p4_file, "--rooted", rooted_file,
            "--root", "2", "--alpha", "0.5",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["path"] == "general"
        assert payload["attachment"] == {"kind": "rooted", "order": 3, "root": 2}
        total = sum(m for _, m in payload["results"][0]["spectrum"])
        assert total == 12

    def test_multiple_alphas(self, capsys):
        code, out, _ = run(
            capsys, "spectrum", "--cycle", "4", "--bethe", "d=2,k=2",
            "--alpha", "0,0.5,0.9",
        )
        assert code == 0
        payload = json.loads(out)
        assert [r["alpha"] for r in payload["results"]] == [0.0, 0.5, 0.9]

    def test_csv_shape(self, capsys):
        code, out, _ = run(
            capsys, "spectrum", "--cycle", "3", "--bethe", "d=2,k=2",
            "--alpha", "0", "--format", "csv",
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "alpha,value,multiplicity"
        assert sum(int(line.rsplit(",", 1)[1]) for line in lines[1:]) == 9

    def test_alpha_one_structured_rejected(self, capsys):
        code, out, err = run(
            capsys, "spectrum", "--cycle", "3", "--bethe", "d=2,k=2", "--alpha", "1"
        )
        assert code == 2
        assert err.startswith("error: validation:")
        assert "[0, 1)" in err

    def test_alpha_one_general_allowed(self, capsys, p4_file, rooted_file):
        code, out, _ = run(
            capsys, "spectrum", "--graph", p4_file, "--rooted", rooted_file,
            "--root", "1", "--alpha", "1",
        )
        assert code == 0

    def test_structured_flag_rejects_rooted(self, capsys, p4_file, rooted_file):
        code, _, err = run(
            capsys, "spectrum", "--graph", p4_file, "--rooted", rooted_file,
            "--root", "1", "--structured",
        )
        assert code == 2 and "tree spec" in err

    def test_base_required(self, capsys):
        code, _, err = run(capsys, "spectrum", "--bethe", "d=2,k=2")
        assert code == 2 and err.startswith("error: validation:")

    def test_conflicting_bases(self, capsys, p4_file):
        code, _, err = run(
            capsys, "spectrum", "--cycle", "3", "--graph", p4_file, "--bethe", "d=2,k=2"
        )
        assert code == 2

    def test_bad_bethe_arg(self, capsys):
        code, _, err = run(capsys, "spectrum", "--cycle", "3", "--bethe", "2x3")
        assert code == 2 and "d=D,k=K" in err

    def test_short_cycle(self, capsys):
        code, _, err = run(capsys, "spectrum", "--cycle", "2", "--bethe", "d=2,k=2")
        assert code == 2

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(
            capsys, "spectrum", "--graph", str(tmp_path / "nope.edges"),
            "--bethe", "d=2,k=2",
        )
        assert code == 2 and "cannot read" in err

    def test_bad_alpha(self, capsys):
        code, _, err = run(
            capsys, "spectrum", "--cycle", "3", "--bethe", "d=2,k=2", "--alpha", "1.5"
        )
        assert code == 2

    def test_bad_tolerance(self, capsys):
        code, _, err = run(
            capsys, "spectrum", "--cycle", "3", "--bethe", "d=2,k=2",
            "--tol-solve=-1e-9",
        )
        assert code == 2 and "--tol-solve" in err


class TestVerify:
    def test_cycle_pass(self, capsys):
        code, out, err = run(
            capsys, "verify", "--cycle", "4", "--bethe", "d=2,k=3", "--alpha", "0.25"
        )
        assert code == 0 and err == ""
        payload = json.loads(out)
        assert payload["passed"] is True
        assert payload["composed_order"] == 28
        (res,) = payload["results"]
        assert res["max_deviation"] <= 1e-8

    def test_graph_base_pass(self, capsys, p4_file):
        code, out, _ = run(
            capsys, "verify", "--graph", p4_file, "--bethe", "d=2,k=2",
            "--alpha", "0,0.6",
        )
        assert code == 0
        assert json.loads(out)["passed"] is True

    def test_point_attachment(self, capsys, tmp_path):
        spec = tmp_path / "k1.json"
        spec.write_text('{"k": 1, "degrees": [1]}')
        code, out, _ = run(
            capsys, "verify", "--cycle", "5", "--spec", str(spec), "--alpha", "0.3"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["composed_order"] == 5
        assert payload["passed"] is True

    def test_corrupted_spec_file(self, capsys, tmp_path):
        spec = tmp_path / "bad.json"
        spec.write_text('{"k": 3, "degrees": [1, 3, 2], "counts": [2, 2, 1]}')
        code, _, err = run(capsys, "verify", "--cycle", "3", "--spec", str(spec))
        assert code == 2 and err.startswith("error: validation:")

    def test_impossible_compare_tol_fails(self, capsys):
        code, out, err = run(
            capsys, "verify", "--cycle", "3", "--bethe", "d=2,k=3",
            "--alpha", "0.5", "--tol-compare", "1e-300",
        )
        assert code == 1
        assert err.startswith("error: mismatch:")
        assert json.loads(out)["passed"] is False

    def test_csv_shape(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--cycle", "3", "--bethe", "d=2,k=2",
            "--alpha", "0,0.5", "--format", "csv",
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "alpha,total,max_deviation,passed"
        assert len(lines) == 3
        assert all(line.endswith("True") for line in lines[1:])

    def test_alpha_one_rejected(self, capsys):
        code, _, err = run(capsys, "verify", "--cycle", "3", "--bethe", "d=2,k=2", "--alpha", "1")
        assert code == 2


class TestBound:
    def test_single_graph_cycle(self, capsys, tmp_path):
        p = tmp_path / "c6.edges"
        p.write_text("6\n1 2\n2 3\n3 4\n4 5\n5 6\n1 6\n")
        code, out, _ = run(capsys, "bound", "--graph", str(p), "--alpha", "0.4")
        assert code == 0
        payload = json.loads(out)
        (row,) = payload["results"]
        assert row["case"] == "plain-cycle"
        assert row["applicable"] is False
        assert abs(row["rho"] - 2.0) <= 1e-9
        assert payload["passed"] is True

    def test_specimen_fixture(self, capsys):
        code, out, _ = run(capsys, "bound", "--graph", DATA, "--alpha", "0")
        assert code == 0
        (row,) = json.loads(out)["results"]
        assert row["delta"] == 5 and row["height"] == 5
        assert row["satisfied"] is True

    def test_corpus_sweep(self, capsys):
        code, out, _ = run(
            capsys, "bound", "--corpus", "n<=7", "--seed", "7", "--alpha", "0,0.3,0.7"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["violations"] == 0 and payload["passed"] is True
        assert payload["checked"] == len(payload["results"])
        assert payload["checked"] % 3 == 0 and payload["checked"] > 0

    def test_corpus_csv(self, capsys):
        code, out, _ = run(
            capsys, "bound", "--corpus", "n<=5", "--alpha", "0", "--format", "csv"
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "graph,n,delta,height,alpha,rho,bound,slack,case,applicable,satisfied"
        assert lines[1].startswith("cycle-3,3,2,1,")

    def test_bad_selector(self, capsys):
        code, _, err = run(capsys, "bound", "--corpus", "m<=9")
        assert code == 2 and "n<=9" in err

    def test_graph_and_corpus_conflict(self, capsys):
        code, _, err = run(capsys, "bound", "--graph", DATA, "--corpus", "n<=5")
        assert code == 2

    def test_neither_source(self, capsys):
        code, _, err = run(capsys, "bound")
        assert code == 2

    def test_threads_env_same_output(self, capsys, monkeypatch):
        argv = ("bound", "--corpus", "n<=6", "--seed", "3", "--alpha", "0,0.5")
        _, single, _ = run(capsys, *argv)
        monkeypatch.setenv("ASPEC_THREADS", "3")
        _, pooled, _ = run(capsys, *argv)
        assert single == pooled

    def test_threads_env_invalid(self, capsys, monkeypatch):
        monkeypatch.setenv("ASPEC_THREADS", "many")
        code, _, err = run(capsys, "bound", "--corpus", "n<=5")
        assert code == 2 and "ASPEC_THREADS" in err


class TestConstants:
    def test_json_values(self, capsys):
        code, out, _ = run(capsys, "constants")
        assert code == 0
        payload = json.loads(out)
        assert -0.25 < payload["threshold_root_height3"] < -0.2
        assert -1.2 < payload["threshold_root_height2"] < -1.1
        assert 0.0909 < payload["alpha_threshold_height3"] < 0.1112
        assert 0.3548 < payload["alpha_threshold_height2"] < 0.375
        assert payload["residual_height3"] <= 1e-10
        assert payload["residual_height2"] <= 1e-10

    def test_csv_shape(self, capsys):
        code, out, _ = run(capsys, "constants", "--format", "csv")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "name,value"
        assert len(lines) == 9


class TestDeterminism:
    @pytest.mark.parametrize(
        "argv",
        [
            ("spectrum", "--cycle", "5", "--bethe", "d=3,k=3", "--alpha", "0,0.5"),
            ("verify", "--cycle", "4", "--bethe", "d=2,k=3", "--alpha", "0.25"),
            ("bound", "--corpus", "n<=6", "--seed", "11", "--alpha", "0,0.7"),
            ("constants",),
        ],
    )
    def test_repeat_runs_byte_identical(self, capsys, argv):
        code1, out1, _ = run(capsys, *argv)
        code2, out2, _ = run(capsys, *argv)
        assert code1 == code2 == 0
        assert out1 == out2

    def test_module_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "aspec.cli", "constants", "--format", "csv"],
            capture_output=True, text=True, timeout=120,
        )
        assert proc.returncode == 0
        assert proc.stdout.splitlines()[0] == "name,value"
