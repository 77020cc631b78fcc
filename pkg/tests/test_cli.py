import json

import numpy as np
import pytest

from eigenlink.cli import main


def run_cli(*argv):
    return main(list(argv))


@pytest.fixture()
def fixture_edges(tmp_path):
    out = tmp_path / "net.edges"
    code = run_cli(
        "generate",
        "--n", "40",
        "--steps", "8",
        "--trajectory", "linear",
        "--growth", "0.2",
        "--jitter", "0.6",
        "--density", "0.08",
        "--seed", "13",
        "--out", str(out),
    )
    assert code == 0
    return out


class TestGenerate:
    def test_writes_edge_list_and_sidecars(self, fixture_edges):
        assert fixture_edges.exists()
        truth = json.loads(fixture_edges.with_suffix(".edges.truth.json").read_text())
        assert truth["n"] == 40
        assert "eigenvalue_paths" in truth
        assert "basis" not in truth
        manifest = json.loads(fixture_edges.with_suffix(".edges.manifest.json").read_text())
        assert manifest["subcommand"] == "generate"
        assert manifest["config"]["seed"] == 13
        assert "created_at" in manifest

    def test_deterministic_output(self, tmp_path):
        paths = []
        for name in ("a.edges", "b.edges"):
            out = tmp_path / name
            run_cli("generate", "--n", "20", "--steps", "5", "--seed", "3",
                    "--density", "0.1", "--out", str(out))
            paths.append(out.read_text())
        assert paths[0] == paths[1]


class TestIngest:
    def test_stats_and_lcc(self, tmp_path):
        edges = tmp_path / "toy.edges"
        edges.write_text("a b 1\nb c 2\nd e 3\na a 4\nb a 9\n")
        out = tmp_path / "ingested"
        assert run_cli("ingest", "--input", str(edges), "--out", str(out)) == 0
        stats = json.loads((out / "stats.json").read_text())
        assert stats["vertices"] == 5
        assert stats["edges"] == 3
        assert stats["self_loops_dropped"] == 1
        assert stats["duplicates_merged"] == 1
        assert stats["lcc_vertices"] == 3
        assert (out / "lcc.edges").exists()
        assert (out / "manifest.json").exists()


class TestVerify:
    def test_outputs_and_verdict(self, fixture_edges, tmp_path, capsys):
        out = tmp_path / "verify"
        code = run_cli(
            "verify", "--input", str(fixture_edges), "--out", str(out),
            "--steps", "6", "--fraction", "0.1",
        )
        assert code == 0
        line = capsys.readouterr().out.strip().splitlines()[-1]
        assert line.startswith("spectral-evolution-assumption: ")
        payload = json.loads((out / "verify.json").read_text())
        assert set(payload) >= {"diagonality_score", "evolution_min", "passed", "dims"}
        for name in ("evolution.csv", "stability.csv", "delta.csv", "manifest.json"):
            assert (out / name).exists()


class TestPredict:
    def test_scores_and_threshold(self, fixture_edges, tmp_path):
        out = tmp_path / "pred"
        code = run_cli(
            "predict", "--input", str(fixture_edges), "--out", str(out),
            "--method", "linreg", "--steps", "6", "--delta", "0.5", "--no-lcc",
        )
        assert code == 0
        scores = np.loadtxt(out / "scores.csv", delimiter=",")
        assert scores.shape[0] == scores.shape[1] > 0
        assert np.allclose(scores, scores.T)
        predicted = np.loadtxt(out / "predicted_adjacency.csv", delimiter=",")
        assert set(np.unique(predicted)) <= {0.0, 1.0}
        forecast = json.loads((out / "forecast.json").read_text())
        assert forecast["method"] == "linear_regression"


class TestEvaluate:
    def test_cell_count_and_determinism(self, fixture_edges, tmp_path):
        reports = []
        for name in ("e1", "e2"):
            out = tmp_path / name
            code = run_cli(
                "evaluate", "--input", str(fixture_edges), "--out", str(out),
                "--methods", "triangle,exp:auto,neumann:auto,extrapolate,linreg,quadreg",
                "--ratios", "0.75,0.8", "--seed", "7", "--steps", "6", "--csv",
            )
            assert code == 0
            reports.append(json.loads((out / "report.json").read_text()))
            assert (out / "report.csv").exists()
        assert len(reports[0]["results"]) == 12
        def strip(report):
            for row in report["results"]:
                row.pop("runtime_s")
            return report
        assert strip(reports[0]) == strip(reports[1])


class TestExitCodes:
    def test_missing_input_is_io_error(self, tmp_path):
        code = run_cli("ingest", "--input", str(tmp_path / "nope.edges"),
                       "--out", str(tmp_path / "out"))
        assert code == 4

    def test_malformed_input_is_io_error(self, tmp_path, capsys):
        bad = tmp_path / "bad.edges"
        bad.write_text("a b\n")
        code = run_cli("ingest", "--input", str(bad), "--out", str(tmp_path / "out"))
        assert code == 4
        err = capsys.readouterr().err
        assert "eigenlink-error" in err
        assert "\n" not in err.strip()

    def test_bad_method_is_usage_error(self, fixture_edges, tmp_path):
        code = run_cli("predict", "--input", str(fixture_edges),
                       "--out", str(tmp_path / "out"), "--method", "laplacian")
        assert code == 2

    def test_numerical_failure_exit_code(self, tmp_path):
        edges = tmp_path / "toy.edges"
        edges.write_text("a b 1\nb c 2\nc d 3\na d 4\n")
        code = run_cli("predict", "--input", str(edges), "--out", str(tmp_path / "out"),
                       "--method", "exp:1000", "--steps", "2")
        assert code == 3
