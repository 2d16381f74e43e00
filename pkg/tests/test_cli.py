"""End-to-end tests of the simulate, fit and bench subcommands."""

import io
import json
import logging
import sys

import numpy as np
import pandas as pd
import pytest

from diffee.cli import bench, fit, main, simulate
from diffee.cli.bench import SCHEMA_HELP
from diffee.datagen.model1 import edge_target
from diffee.estimators import get_estimator
from diffee.linalg import check_same_dim
from diffee.models.experiment import VGridSpec
from diffee.storage import AGGREGATE_COLUMNS, RUN_COLUMNS, read_matrix, read_samples, read_sym


def _simulate(out):
    args = ["simulate", "--model", "2", "--p", "20", "--s", "0.2", "--nc", "40", "--nd", "40", "--seed", "7"]
    return main([*args, "--out", str(out)])


def _write_config(path, **fields):
    lines = [f"{key} = {json.dumps(value)}" for key, value in fields.items()]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


class TestSimulate:
    def test_writes_matrices_and_manifest(self, tmp_path):
        out = tmp_path / "d"
        code = main([
            "simulate", "--model", "2", "--p", "50", "--s", "0.2",
            "--nc", "25", "--nd", "25", "--seed", "7", "--out", str(out),
        ])
        assert code == 0
        names = sorted(f.name for f in out.iterdir())
        assert names == sorted(["X_c.csv", "X_d.csv", "omega_c.csv", "omega_d.csv", "delta_star.csv", "manifest.json"])
        assert read_matrix(out / "X_c.csv").shape == (25, 50)
        manifest = json.loads((out / "manifest.json").read_text())
        assert manifest["model"] == "model2"
        assert manifest["delta_c"] > 0
        assert manifest["graph_law"] is None

    def test_byte_identical_reruns(self, tmp_path):
        assert _simulate(tmp_path / "a") == 0
        assert _simulate(tmp_path / "b") == 0
        for f in (tmp_path / "a").iterdir():
            assert f.read_bytes() == (tmp_path / "b" / f.name).read_bytes()

    def test_files_round_trip_truth_exactly(self, tmp_path):
        _simulate(tmp_path)
        omega_c = read_matrix(tmp_path / "omega_c.csv")
        omega_d = read_matrix(tmp_path / "omega_d.csv")
        delta = read_matrix(tmp_path / "delta_star.csv")
        assert np.array_equal(delta, omega_d - omega_c)

    def test_model1_records_hubs(self, tmp_path):
        code = main(["simulate", "--model", "1", "--p", "30", "--seed", "2", "--out", str(tmp_path)])
        assert code == 0
        manifest = json.loads((tmp_path / "manifest.json").read_text())
        assert len(manifest["hubs"]) == 2
        assert manifest["n_c"] == 15
        assert "exponent near 3" in manifest["graph_law"]

    def test_invalid_generator_parameters(self, tmp_path, capsys):
        code = main(["simulate", "--model", "1", "--p", "5", "--s", "0.9", "--out", str(tmp_path)])
        assert code == 2
        assert "p >= 10" in capsys.readouterr().err

    def test_usage_error(self, tmp_path):
        with pytest.raises(SystemExit) as info:
            main(["simulate", "--model", "3", "--p", "20", "--out", str(tmp_path)])
        assert info.value.code == 2


class TestFit:
    def test_grid_with_truth_reports_f1(self, tmp_path):
        data = tmp_path / "data"
        _simulate(data)
        out = tmp_path / "fit"
        code = main([
            "fit", "--xc", str(data / "X_c.csv"), "--xd", str(data / "X_d.csv"),
            "--lambda-grid", "paper", "--truth", str(data / "delta_star.csv"), "--out", str(out),
        ])
        assert code == 0
        report = json.loads((out / "report.json").read_text())
        assert report["v_rule"] == "auto"
        assert len(report["f1"]) == len(report["lambdas"]) == 30
        assert (out / "delta_lambda_01.csv").exists()
        assert (out / "delta_lambda_30.csv").exists()

    def test_huge_lambda_gives_zero_matrix(self, tmp_path):
        _simulate(tmp_path)
        out = tmp_path / "fit"
        code = main([
            "fit", "--xc", str(tmp_path / "X_c.csv"), "--xd", str(tmp_path / "X_d.csv"),
            "--v", "0.01", "--lambda", "1e9", "--out", str(out),
        ])
        assert code == 0
        assert not read_matrix(out / "delta.csv").any()
        assert json.loads((out / "report.json").read_text())["support_sizes"] == [0]

    def test_theory_rule(self, tmp_path):
        _simulate(tmp_path)
        code = main([
            "fit", "--xc", str(tmp_path / "X_c.csv"), "--xd", str(tmp_path / "X_d.csv"),
            "--v", "theory:0.5", "--lambda", "0.05", "--method", "naive", "--out", str(tmp_path / "fit"),
        ])
        assert code == 0
        report = json.loads((tmp_path / "fit" / "report.json").read_text())
        assert report["v_rule"] == "theory"
        assert report["v"] == pytest.approx(0.5 * np.sqrt(np.log(20) / 40))

    def test_singular_covariance_names_condition(self, tmp_path, capsys):
        main([
            "simulate", "--model", "2", "--p", "30", "--nc", "10", "--nd", "10", "--out", str(tmp_path),
        ])
        code = main([
            "fit", "--xc", str(tmp_path / "X_c.csv"), "--xd", str(tmp_path / "X_d.csv"),
            "--v", "0", "--lambda", "0.1", "--out", str(tmp_path / "fit"),
        ])
        assert code == 1
        err = capsys.readouterr().err
        assert "not invertible" in err
        assert "'c'" in err or "'d'" in err

    def test_ragged_file(self, tmp_path):
        (tmp_path / "bad.csv").write_text("1,2,3\n4,5\n", encoding="utf-8")
        _simulate(tmp_path)
        code = main([
            "fit", "--xc", str(tmp_path / "bad.csv"), "--xd", str(tmp_path / "X_d.csv"),
            "--lambda", "0.1", "--out", str(tmp_path / "fit"),
        ])
        assert code == 2

    def test_bad_v_flag(self, tmp_path):
        _simulate(tmp_path)
        code = main([
            "fit", "--xc", str(tmp_path / "X_c.csv"), "--xd", str(tmp_path / "X_d.csv"),
            "--v", "sometimes", "--lambda", "0.1", "--out", str(tmp_path / "fit"),
        ])
        assert code == 2


class TestBench:
    def _config(self, tmp_path):
        return _write_config(
            tmp_path / "sweep.toml",
            model=2, p_list=[12, 16], s_list=[0.2], n_pairs=[[30, 40]], seeds=[0, 1], methods=["diffee"],
        )

    def test_row_counts_and_schema(self, tmp_path, capsys):
        out = tmp_path / "out"
        code = main(["bench", str(self._config(tmp_path)), "--out", str(out)])
        assert code == 0
        aggregate = pd.read_csv(out / "aggregate.csv")
        runs = pd.read_csv(out / "runs.csv")
        assert list(aggregate.columns) == AGGREGATE_COLUMNS
        assert list(runs.columns) == RUN_COLUMNS
        assert len(aggregate) == 2
        assert len(runs) == 2 * 2 * 30
        assert list(aggregate["p"]) == [12, 16]
        assert set(aggregate["nd"]) == {40}
        assert "best_f1_mean" in capsys.readouterr().out

    def test_omit_timing_is_byte_stable(self, tmp_path):
        config = self._config(tmp_path)
        for name in ("a", "b"):
            assert main(["bench", str(config), "--omit-timing", "--out", str(tmp_path / name)]) == 0
        for name in ("runs.csv", "aggregate.csv"):
            assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()
        assert pd.read_csv(tmp_path / "a" / "aggregate.csv")["total_seconds"].isna().all()

    def test_all_cells_failing_exits_one(self, tmp_path, capsys):
        config = tmp_path / "fail.toml"
        config.write_text(
            'model = 2\np_list = [30]\nn_pairs = [[5, 5]]\nseeds = [0]\n\n[v_grid]\nstep = 0.001\nsize = 1\n',
            encoding="utf-8",
        )
        assert main(["bench", str(config), "--out", str(tmp_path / "out")]) == 1
        assert "FAILED" in capsys.readouterr().out

    def test_unknown_config_key(self, tmp_path):
        config = _write_config(tmp_path / "typo.toml", model=2, p_lsit=[20])
        assert main(["bench", str(config)]) == 2

    def test_seeds_override(self, tmp_path):
        out = tmp_path / "out"
        assert main(["bench", str(self._config(tmp_path)), "--seeds", "1", "--omit-timing", "--out", str(out)]) == 0
        assert set(pd.read_csv(out / "runs.csv")["seed"]) == {0}

    def test_recorded_timing_forces_serial(self, tmp_path, monkeypatch, caplog):
        jobs_seen = []
        real = bench.run_experiment

        def spy(config, jobs=1):
            jobs_seen.append(jobs)
            return real(config, jobs=jobs)

        monkeypatch.setattr(bench, "run_experiment", spy)
        config = str(self._config(tmp_path))
        with caplog.at_level("WARNING", logger="diffee"):
            assert main(["bench", config, "--jobs", "2", "--out", str(tmp_path / "timed")]) == 0
        assert main(["bench", config, "--jobs", "2", "--omit-timing", "--out", str(tmp_path / "untimed")]) == 0
        assert jobs_seen == [1, 2]
        assert any("--jobs 1" in r.getMessage() for r in caplog.records)

    def test_epilog_states_when_reruns_are_identical(self):
        assert "byte-identical only under --omit-timing" in SCHEMA_HELP


class TestLogging:
    def test_log_level_flag(self, tmp_path, caplog):
        with caplog.at_level("DEBUG", logger="diffee"):
            code = main([
                "--log-level", "debug", "simulate", "--model", "2", "--p", "20", "--out", str(tmp_path),
            ])
        assert code == 0
        assert any("simulated model2" in r.getMessage() for r in caplog.records)

    def test_handler_installed_once(self, tmp_path):
        _simulate(tmp_path / "a")
        _simulate(tmp_path / "b")
        names = [h.get_name() for h in logging.getLogger("diffee").handlers]
        assert names.count("diffee-stream") == 1

    def test_rebinds_after_stderr_closed(self, tmp_path, monkeypatch):
        first = io.TextIOWrapper(io.BytesIO(), encoding="utf-8")
        monkeypatch.setattr(sys, "stderr", first)
        assert _simulate(tmp_path / "a") == 0
        first.close()
        second = io.StringIO()
        monkeypatch.setattr(sys, "stderr", second)
        assert _simulate(tmp_path / "b") == 0
        assert "simulated model2" in second.getvalue()


class TestHelpText:
    @pytest.mark.parametrize(
        "func",
        [
            check_same_dim, get_estimator, edge_target, read_samples, read_sym, VGridSpec.values,
            simulate.register, simulate.run, fit.register, fit.run, bench.register, bench.run,
        ],
    )
    def test_public_helpers_have_docstrings(self, func):
        assert func.__doc__ and func.__doc__.strip()
