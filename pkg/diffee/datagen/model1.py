"""Hub-driven graph pairs on a power-law network."""

import logging
import math
from typing import List, Optional, Tuple

import numpy as np

from diffee.core.errors import InvalidInputError
from diffee.datagen.rng import Stream, child_rng
from diffee.linalg import min_eigenvalue
from diffee.models.matrices import MatrixRole, SymMatrix
from diffee.models.truth import GraphModel, GroundTruth

logger = logging.getLogger(__name__)

HUB_COUNT = 2
HUB_EDGE_FRACTION = 0.2
WEIGHT_LOW = 4.0
WEIGHT_HIGH = 10.0
PD_MARGIN = 0.01
MIN_P = 10
GRAPH_LAW = "preferential attachment on degree + 1, degree tail exponent near 3"


def edge_target(p: int, s: float) -> int:
    """Edge count floor(s * p(p-1)/2) for sparsity s"""
    return math.floor(s * p * (p - 1) / 2)


def _quotas(p: int, m: int) -> np.ndarray:
    """Edges each arriving node brings, spread evenly and capped by the nodes already present"""
    quotas = np.zeros(p, dtype=np.int64)
    remaining = m
    for t in range(1, p):
        share = math.ceil(remaining / (p - t))
        quotas[t] = min(t, share)
        remaining -= quotas[t]
    if remaining:
        raise InvalidInputError(f"cannot place {m} edges on {p} nodes")
    return quotas


def power_law_graph(
    p: int,
    m: int,
    rng: np.random.Generator,
    label_rng: Optional[np.random.Generator] = None,
) -> np.ndarray:
    """Preferential-attachment graph with exactly m undirected edges.

    Nodes arrive in order; node t links to its quota of distinct earlier
    nodes with probability proportional to (degree + 1). Linear attachment
    with an offset of 1 gives a degree tail P(k) ~ k^-(3 + 1/m_t), where m_t
    is the per-node quota, so the exponent sits just above 3 rather than at 2.
    Labels are shuffled at the end, from label_rng when given, so hubs land
    on random indices. Returns a boolean adjacency.
    """
    if m > p * (p - 1) // 2:
        raise InvalidInputError(f"requested {m} edges exceeds the p(p-1)/2 = {p * (p - 1) // 2} capacity")
    degree = np.zeros(p, dtype=np.int64)
    adjacency = np.zeros((p, p), dtype=bool)
    for t, quota in enumerate(_quotas(p, m)):
        if quota == 0:
            continue
        weights = degree[:t] + 1.0
        targets = rng.choice(t, size=int(quota), replace=False, p=weights / weights.sum())
        adjacency[t, targets] = True
        adjacency[targets, t] = True
        degree[targets] += 1
        degree[t] += quota
    labels = (rng if label_rng is None else label_rng).permutation(p)
    return adjacency[np.ix_(labels, labels)]


def top_hubs(adjacency: np.ndarray, count: int = HUB_COUNT) -> List[int]:
    """Highest-degree nodes; ties go to the lower index"""
    degree = adjacency.sum(axis=1)
    order = sorted(range(len(degree)), key=lambda i: (-int(degree[i]), i))
    return order[:count]


def hub_differential_edges(omega: np.ndarray, adjacency: np.ndarray, hubs: List[int]) -> List[Tuple[int, int]]:
    """Top HUB_EDGE_FRACTION of the edges pooled across all hubs, by |Ω_d| magnitude.

    Magnitude ties are broken by lexicographic (i, j) order.
    """
    pooled = sorted(
        {(min(h, j), max(h, j)) for h in hubs for j in np.flatnonzero(adjacency[h]).tolist()}
    )
    keep = math.ceil(HUB_EDGE_FRACTION * len(pooled))
    ranked = sorted(pooled, key=lambda e: (-abs(omega[e]), e))
    return ranked[:keep]


def gen_model1(p: int, s: float, seed: int) -> GroundTruth:
    """Power-law Ω_d with a differential network on its two top hubs"""
    if p < MIN_P:
        raise InvalidInputError(f"model 1 requires p >= {MIN_P}, got p={p}")
    if not 0 < s <= 1:
        raise InvalidInputError(f"model 1 requires s in (0, 1], got s={s}")
    m = edge_target(p, s)
    if m < 1:
        raise InvalidInputError(f"s * p(p-1)/2 must be >= 1, got {s * p * (p - 1) / 2:g}")
    if m > p * (p - 1) // 2:
        raise InvalidInputError(f"requested {m} edges exceeds the p(p-1)/2 capacity")

    adjacency = power_law_graph(p, m, child_rng(seed, Stream.GRAPH), child_rng(seed, Stream.LABELS))

    weight_rng = child_rng(seed, Stream.WEIGHTS)
    magnitude = weight_rng.uniform(WEIGHT_LOW / p, WEIGHT_HIGH / p, size=(p, p))
    sign = np.where(weight_rng.random((p, p)) < 0.5, -1.0, 1.0)
    omega_d = np.where(adjacency, sign * magnitude, 0.0)
    np.fill_diagonal(omega_d, 1.0)
    omega_d = (omega_d + omega_d.T) / 2.0

    hubs = top_hubs(adjacency)
    delta = np.zeros_like(omega_d)
    for i, j in hub_differential_edges(omega_d, adjacency, hubs):
        delta[i, j] = omega_d[i, j]
        delta[j, i] = omega_d[j, i]
    omega_c = omega_d - delta

    lowest = min(min_eigenvalue(omega_c), min_eigenvalue(omega_d))
    boost = 0.0
    if lowest <= 0:
        boost = abs(lowest) + PD_MARGIN
        logger.warning("model 1 seed=%d p=%d: boosting diagonals by %.4g for positive definiteness", seed, p, boost)
        omega_c = omega_c + boost * np.eye(p)
        omega_d = omega_d + boost * np.eye(p)

    delta_star = omega_d - omega_c
    truth = GroundTruth(
        omega_c=SymMatrix.of(omega_c, MatrixRole.PRECISION),
        omega_d=SymMatrix.of(omega_d, MatrixRole.PRECISION),
        delta_star=SymMatrix.of(delta_star, MatrixRole.DIFFERENTIAL),
        support=GroundTruth.support_of(delta_star),
        k=int(np.count_nonzero(delta_star)),
        model=GraphModel.MODEL1,
        p=p,
        s=s,
        seed=seed,
        pd_boost=boost,
        hubs=hubs,
        edge_count=int(np.count_nonzero(np.triu(adjacency, k=1))),
    )
    if min(min_eigenvalue(truth.omega_c), min_eigenvalue(truth.omega_d)) <= 0:
        raise InvalidInputError(f"model 1 seed={seed}: precision matrices are not positive definite")
    logger.info("model 1 p=%d s=%g seed=%d: %d edges, k=%d, hubs=%s", p, s, seed, truth.edge_count, truth.k, hubs)
    return truth
