import json
import math
import subprocess
import sys

import pytest

from qaa.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestIncrement:
    def test_prints_verdict(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "increment",
            "--beta", "3.141592653589793",
            "--gamma", "3.141592653589793",
            "--theta", "0.125082",
            "--n", "8",
        )
        assert code == 0
        assert "increment" in out
        assert "qaao" in out

    def test_published_negative_row(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "increment",
            "--beta", "2.8209",
            "--gamma", "-2.8950",
            "--theta", "1.9147",
            "--phi", "5.1123",
            "--n", "8",
        )
        assert code == 0
        assert "-0.006" in out

    def test_out_of_range_beta_fails(self, capsys):
        code, _, err = run_cli(
            capsys, "increment", "--beta", "7.0", "--gamma", "0.0", "--theta", "1.0"
        )
        assert code == 2
        assert err.startswith("error:")


class TestTable:
    def test_appendix_first_row(self, capsys):
        code, out, _ = run_cli(capsys, "table", "appendix")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "no,theta,phi,beta,gamma,increment,qaao"
        assert len(lines) == 22
        assert lines[1].startswith("1,0.125082,0.000000,3.129148,")
        assert lines[1].endswith(",O")

    def test_main_subset(self, capsys):
        code, out, _ = run_cli(capsys, "table", "main")
        lines = out.splitlines()
        assert code == 0
        assert [line.split(",")[0] for line in lines[1:]] == ["9", "10", "11", "12"]
        assert all(line.endswith(",X") for line in lines[1:])

    def test_json_format(self, capsys):
        code, out, _ = run_cli(capsys, "table", "main", "--format", "json")
        rows = json.loads(out)
        assert code == 0
        assert [r["no"] for r in rows] == [9, 10, 11, 12]
        assert rows[0]["increment"] == pytest.approx(-0.0061, abs=1e-3)


class TestSearch:
    def test_optimal_csv(self, capsys):
        code, out, _ = run_cli(capsys, "search", "optimal", "--n", "8")
        lines = out.splitlines()
        assert code == 0
        assert len(lines) == 14
        assert lines[-1].split(",")[5] == "1.000000"

    def test_statevector_backend_agrees(self, capsys):
        _, analytic, _ = run_cli(capsys, "search", "optimal", "--n", "6")
        _, statevector, _ = run_cli(
            capsys, "search", "optimal", "--n", "6", "--backend", "statevector"
        )
        assert analytic == statevector

    def test_pi3_series(self, capsys):
        code, out, _ = run_cli(capsys, "search", "pi3", "--n", "8", "--format", "json")
        rows = json.loads(out)
        assert code == 0
        assert rows[0] == {"depth": 0, "queries": 0, "probability": pytest.approx(1 / 256)}
        assert rows[6]["queries"] == 364
        assert rows[6]["probability"] >= 0.9

    def test_histogram_shots(self, capsys, tmp_path):
        out_file = tmp_path / "traj.csv"
        code, _, _ = run_cli(
            capsys,
            "search", "optimal", "--n", "4", "--target", "1010",
            "--shots", "100", "--seed", "3", "--out", str(out_file),
        )
        assert code == 0
        hist = json.loads((tmp_path / "traj.csv.hist.json").read_text())
        assert hist == {"1010": 100}

    def test_deterministic_byte_identical(self, capsys):
        outputs = [
            run_cli(capsys, "search", "random-qaao", "--n", "8", "--seed", "11")[1]
            for _ in range(2)
        ]
        assert outputs[0] == outputs[1]

    def test_output_dir_env(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("QAA_OUTPUT_DIR", str(tmp_path))
        code, _, _ = run_cli(capsys, "search", "optimal", "--n", "4", "--out", "t.csv")
        assert code == 0
        assert (tmp_path / "t.csv").exists()


class TestFigure:
    def test_fig1b(self, capsys):
        code, out, _ = run_cli(capsys, "figure", "fig1b", "--n", "8")
        lines = out.splitlines()
        assert code == 0
        assert lines[0] == "step,probability"
        assert len(lines) == 13  # K*(8) = 12 Grover steps

    def test_fig3_has_three_deltas(self, capsys):
        code, out, _ = run_cli(capsys, "figure", "fig3", "--n", "6")
        assert code == 0
        deltas = {line.split(",")[0] for line in out.splitlines()[1:]}
        assert len(deltas) == 3

    def test_region_payload(self, capsys):
        code, out, _ = run_cli(capsys, "figure", "region", "--n", "8", "--seed", "1")
        payload = json.loads(out)
        assert code == 0
        assert payload["positive_fraction"] == pytest.approx(0.5, abs=0.01)
        assert payload["boundary"]

    def test_fig4_compare(self, capsys):
        code, out, _ = run_cli(capsys, "figure", "fig4", "--n", "8")
        payload = json.loads(out)
        assert code == 0
        kinds = [a["kind"] for a in payload["algorithms"]]
        assert "fixed-point" in kinds and "pi3" in kinds


class TestExportQasm:
    def test_grover_circuit(self, capsys):
        code, out, _ = run_cli(
            capsys, "export-qasm", "grover", "--n", "3", "--target", "110"
        )
        assert code == 0
        assert out.startswith("OPENQASM 3.0;")
        assert "qubit[3] q;" in out

    def test_verify_flag(self, capsys):
        code, out, err = run_cli(
            capsys,
            "export-qasm", "grover", "--n", "3", "--target", "110", "--verify",
        )
        assert code == 0
        assert "replay max deviation" in err

    def test_to_file(self, capsys, tmp_path):
        path = tmp_path / "circ.qasm"
        code, out, _ = run_cli(
            capsys, "export-qasm", "optimal", "--n", "4", "--out", str(path)
        )
        assert code == 0
        assert out == ""
        assert path.read_text().startswith("OPENQASM 3.0;")


class TestConfig:
    def test_config_supplies_defaults(self, capsys, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"n": 4}))
        _, out, _ = run_cli(capsys, "search", "optimal", "--config", str(cfg))
        _, want, _ = run_cli(capsys, "search", "optimal", "--n", "4")
        assert out == want

    def test_cli_beats_config(self, capsys, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"n": 4}))
        _, out, _ = run_cli(capsys, "search", "optimal", "--n", "6", "--config", str(cfg))
        _, want, _ = run_cli(capsys, "search", "optimal", "--n", "6")
        assert out == want


class TestEntryPoint:
    def test_console_script(self):
        proc = subprocess.run(
            [sys.executable, "-m", "qaa.cli", "table", "main"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout.splitlines()[0] == "no,theta,phi,beta,gamma,increment,qaao"

    def test_unknown_kind_exits_nonzero(self):
        proc = subprocess.run(
            [sys.executable, "-m", "qaa.cli", "search", "sideways"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode != 0
