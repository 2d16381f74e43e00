from diffee.evaluation.grid import lambda_grid
from diffee.evaluation.metrics import edge_pattern, f1_score
from diffee.evaluation.runner import run_cell, run_experiment, run_seed
from diffee.evaluation.timing import best_of, timing_probe

__all__ = [
    "best_of",
    "edge_pattern",
    "f1_score",
    "lambda_grid",
    "run_cell",
    "run_experiment",
    "run_seed",
    "timing_probe",
]
