"""Tests for edge scoring, the λ grid, timing probes and the experiment runner."""

import numpy as np
import pytest

from diffee.core.errors import CellFailedError, DimensionMismatchError, InvalidInputError
from diffee.estimators import theoretical_v
from diffee.evaluation import best_of, edge_pattern, f1_score, lambda_grid, run_cell, run_experiment, timing_probe
from diffee.models.experiment import ExperimentConfig, VGridSpec, preset
from diffee.models.matrices import MatrixRole, SymMatrix


def _diff(p, edges, value=1.0):
    entries = np.zeros((p, p))
    for i, j in edges:
        entries[i, j] = entries[j, i] = value
    return SymMatrix.of(entries, MatrixRole.DIFFERENTIAL)


class TestF1Score:
    def test_perfect_recovery(self):
        truth = _diff(5, [(0, 1), (2, 4)])
        score = f1_score(truth, truth)
        assert score.f1 == 1.0
        assert (score.tp, score.fp, score.fn) == (2, 0, 0)

    def test_empty_estimate_scores_zero(self):
        score = f1_score(_diff(5, []), _diff(5, [(0, 1)]))
        assert (score.precision, score.recall, score.f1) == (0.0, 0.0, 0.0)

    def test_both_empty_scores_zero(self):
        score = f1_score(_diff(4, []), _diff(4, []))
        assert score.f1 == 0.0
        assert score.tn == 6

    def test_worked_counts(self):
        truth = _diff(6, [(0, 1), (0, 2), (1, 3), (2, 5)])
        estimate = _diff(6, [(0, 1), (0, 2), (4, 5)])
        score = f1_score(estimate, truth)
        assert (score.tp, score.fp, score.fn) == (2, 1, 2)
        assert score.precision == pytest.approx(2 / 3)
        assert score.recall == pytest.approx(1 / 2)
        assert score.f1 == pytest.approx(4 / 7)
        assert score.fp_rate == pytest.approx(1 / 11)

    def test_counts_cover_upper_triangle(self):
        score = f1_score(_diff(7, [(0, 3), (1, 2)]), _diff(7, [(0, 3), (4, 6), (5, 6)]))
        assert score.tp + score.fp + score.fn + score.tn == 7 * 6 // 2

    def test_diagonal_ignored(self):
        estimate = SymMatrix.of(np.eye(4) * 3.0, MatrixRole.DIFFERENTIAL)
        score = f1_score(estimate, _diff(4, []))
        assert score.fp == 0
        assert not edge_pattern(estimate).any()

    def test_permutation_invariant(self, rng):
        p = 8
        truth = _diff(p, [(0, 1), (2, 5), (3, 7), (1, 6)])
        estimate = _diff(p, [(0, 1), (2, 5), (4, 6)], value=-0.3)
        perm = rng.permutation(p)
        permuted = [
            SymMatrix.of(m.entries[np.ix_(perm, perm)], MatrixRole.DIFFERENTIAL) for m in (estimate, truth)
        ]
        assert f1_score(*permuted) == f1_score(estimate, truth)

    def test_scaling_invariant(self):
        truth = _diff(6, [(0, 1), (3, 4)])
        estimate = _diff(6, [(0, 1), (2, 3)], value=0.25)
        scaled = SymMatrix.of(estimate.entries * -7.5, MatrixRole.DIFFERENTIAL)
        assert f1_score(scaled, truth) == f1_score(estimate, truth)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            f1_score(_diff(3, []), _diff(4, []))


class TestLambdaGrid:
    def test_worked_values(self):
        grid = lambda_grid(200, 100, 100)
        assert len(grid) == 30
        assert grid[0] == pytest.approx(0.002302, abs=1e-6)
        assert grid[29] == pytest.approx(30 * grid[0])
        assert grid[29] == pytest.approx(0.069054, abs=1e-6)

    def test_uses_smaller_sample(self):
        assert lambda_grid(200, 100, 400) == lambda_grid(200, 400, 100)

    def test_constant_step(self):
        grid = lambda_grid(50, 25, 30)
        assert all(b > a for a, b in zip(grid, grid[1:]))
        np.testing.assert_allclose(np.diff(grid), grid[0], rtol=1e-12)

    @pytest.mark.parametrize("p, n_c, n_d", [(1, 10, 10), (10, 0, 10), (10, 10, 0)])
    def test_rejects_invalid(self, p, n_c, n_d):
        with pytest.raises(InvalidInputError):
            lambda_grid(p, n_c, n_d)


class TestTimingProbe:
    def test_noop_is_fast(self):
        seconds = timing_probe(lambda: None)
        assert 0 <= seconds < 1e-3

    def test_best_of_takes_fastest_probe(self):
        assert 0 <= best_of(lambda: sum(range(1000)), repeats=5) < 1.0


class TestRunCell:
    def test_reports_per_seed_and_mean(self):
        report = run_cell(2, 20, 0.2, 30, 30, [0, 1, 2], "diffee", v_grid=VGridSpec(size=200).values())
        assert report.ok
        assert [r.seed for r in report.reports] == [0, 1, 2]
        assert report.best_f1_mean == pytest.approx(np.mean([r.f1 for r in report.reports]))
        assert report.total_seconds == pytest.approx(sum(r.fit_time_total for r in report.reports))
        for r in report.reports:
            assert len(r.per_lambda) == 30
            assert r.f1 == max(row.score.f1 for row in r.per_lambda)

    def test_deterministic_scores(self):
        a = run_cell(2, 20, 0.2, 30, 30, [4, 5], "diffee")
        b = run_cell(2, 20, 0.2, 30, 30, [4, 5], "diffee")
        assert [r.f1 for r in a.reports] == [r.f1 for r in b.reports]
        assert [r.best_lambda for r in a.reports] == [r.best_lambda for r in b.reports]

    def test_predicted_edges_shrink_along_path(self):
        report = run_cell(1, 30, 0.2, 40, 40, [3], "diffee")
        predicted = [row.score.predicted for row in report.reports[0].per_lambda]
        assert all(b <= a for a, b in zip(predicted, predicted[1:]))

    def test_without_timing(self):
        report = run_cell(2, 15, 0.2, 20, 20, [0], "naive", record_timing=False)
        assert report.total_seconds is None
        assert report.reports[0].fit_time_total is None

    def test_failure_names_cell(self):
        with pytest.raises(CellFailedError) as info:
            run_cell(2, 30, 0.2, 10, 10, [0], "diffee", v_grid=[0.0])
        assert "p=30" in str(info.value)

    def test_rate_floor_bounds_selected_v(self):
        floor = theoretical_v(20, 30, 30)
        report = run_cell(2, 20, 0.2, 30, 30, [0, 1], "diffee", v_floor_scale=1.0)
        for r in report.reports:
            assert floor <= r.v < floor + 0.001

    def test_rate_floor_above_grid_is_used_directly(self):
        report = run_cell(2, 20, 0.2, 30, 30, [0], "diffee", v_grid=[0.01], v_floor_scale=1.0)
        assert report.reports[0].v == pytest.approx(theoretical_v(20, 30, 30))


class TestRunExperiment:
    def test_one_report_per_cell(self):
        config = ExperimentConfig(model=2, p_list=[12, 16], s_list=[0.2], n_pairs=[(20, 20)], seeds=[0, 1])
        reports = run_experiment(config)
        assert [r.cell.p for r in reports] == [12, 16]
        assert all(r.ok for r in reports)

    def test_failed_cell_is_recorded(self):
        config = ExperimentConfig(
            model=2, p_list=[30], s_list=[0.2], n_pairs=[(10, 10)], seeds=[0],
            v_grid=VGridSpec(step=0.001, size=1),
        )
        (report,) = run_experiment(config)
        assert not report.ok
        assert report.error


class TestPresets:
    def test_vary_p_defaults(self):
        config = preset("vary-p")
        assert config.p_list == [50, 100, 200, 300, 400, 500]
        assert config.sample_sizes(200) == [(100, 100)]
        assert len(config.seeds) == 10

    def test_vary_n_high_cells(self):
        cells = preset("vary-n-high", model=1).cells()
        assert {(c.n_c, c.n_d) for c in cells} == {(100, 100), (100, 50), (50, 100), (50, 50)}
        assert all(c.model.value == "model1" for c in cells)

    def test_overrides_and_unknown_name(self):
        assert preset("vary-s", seeds=[3]).seeds == [3]
        with pytest.raises(ValueError):
            preset("vary-q")
