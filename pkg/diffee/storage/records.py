"""Sidecars, manifests and result CSVs."""

import logging
from pathlib import Path
from typing import Iterable, List

import pandas as pd
from pydantic import BaseModel

from diffee.models.report import CellReport

logger = logging.getLogger(__name__)

RUN_COLUMNS = [
    "model", "p", "s", "nc", "nd", "method", "seed",
    "lambda", "v", "f1", "precision", "recall", "support", "fit_seconds",
]
AGGREGATE_COLUMNS = ["model", "p", "s", "nc", "nd", "method", "best_f1_mean", "total_seconds"]


def write_record(path: Path | str, record: BaseModel) -> Path:
    """Write a pydantic record as indented JSON"""
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(record.model_dump_json(indent=2, by_alias=True) + "\n", encoding="utf-8")
    return target


def run_rows(reports: Iterable[CellReport], record_timing: bool = True) -> pd.DataFrame:
    """One row per (cell, seed, λ)"""
    rows = []
    for cell_report in reports:
        cell = cell_report.cell
        for report in cell_report.reports:
            for point in report.per_lambda:
                rows.append({
                    "model": cell.model.value,
                    "p": cell.p,
                    "s": cell.s,
                    "nc": cell.n_c,
                    "nd": cell.n_d,
                    "method": cell.method,
                    "seed": report.seed,
                    "lambda": point.lambda_,
                    "v": point.v,
                    "f1": point.score.f1,
                    "precision": point.score.precision,
                    "recall": point.score.recall,
                    "support": point.support_size,
                    "fit_seconds": point.fit_seconds if record_timing else None,
                })
    return pd.DataFrame(rows, columns=RUN_COLUMNS)


def aggregate_rows(reports: Iterable[CellReport]) -> pd.DataFrame:
    """One row per cell: seed-mean best F1 and summed fit time"""
    rows = [
        {
            "model": r.cell.model.value,
            "p": r.cell.p,
            "s": r.cell.s,
            "nc": r.cell.n_c,
            "nd": r.cell.n_d,
            "method": r.cell.method,
            "best_f1_mean": r.best_f1_mean,
            "total_seconds": r.total_seconds,
        }
        for r in reports
    ]
    return pd.DataFrame(rows, columns=AGGREGATE_COLUMNS)


def write_results(out_dir: Path | str, reports: List[CellReport], record_timing: bool = True) -> List[Path]:
    """Write runs.csv and aggregate.csv; returns the two paths"""
    target = Path(out_dir)
    target.mkdir(parents=True, exist_ok=True)
    runs_path = target / "runs.csv"
    aggregate_path = target / "aggregate.csv"
    run_rows(reports, record_timing).to_csv(runs_path, index=False, lineterminator="\n")
    aggregate_rows(reports).to_csv(aggregate_path, index=False, lineterminator="\n")
    logger.info("wrote %s and %s", runs_path, aggregate_path)
    return [runs_path, aggregate_path]
