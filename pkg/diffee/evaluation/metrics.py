import numpy as np

from diffee.linalg import check_same_dim
from diffee.models.matrices import SymMatrix
from diffee.models.report import EdgeScore


def _ratio(num: int, den: int) -> float:
    return num / den if den else 0.0


def edge_pattern(matrix: SymMatrix) -> np.ndarray:
    """Strictly nonzero entries of the off-diagonal upper triangle"""
    rows, cols = np.triu_indices(matrix.dim, k=1)
    return matrix.entries[rows, cols] != 0


def f1_score(estimate: SymMatrix, truth: SymMatrix) -> EdgeScore:
    """Edge-level precision, recall and F1; 0/0 scores as 0"""
    check_same_dim(estimate.dim, truth.dim, "estimate and truth")
    predicted = edge_pattern(estimate)
    actual = edge_pattern(truth)
    tp = int(np.count_nonzero(predicted & actual))
    fp = int(np.count_nonzero(predicted & ~actual))
    fn = int(np.count_nonzero(~predicted & actual))
    tn = int(np.count_nonzero(~predicted & ~actual))
    precision = _ratio(tp, tp + fp)
    recall = _ratio(tp, tp + fn)
    f1 = 2 * precision * recall / (precision + recall) if precision + recall > 0 else 0.0
    return EdgeScore(
        tp=tp, fp=fp, fn=fn, tn=tn,
        precision=precision, recall=recall, f1=f1,
        fp_rate=_ratio(fp, fp + tn),
    )
