import argparse
import logging
from pathlib import Path
from typing import List, Optional, Tuple

from diffee.core.errors import InvalidInputError
from diffee.estimators import get_estimator, select_v, theoretical_v
from diffee.evaluation import f1_score, lambda_grid
from diffee.linalg import sample_covariance
from diffee.models.estimate import DiffEstimate, FitSidecar
from diffee.models.experiment import VGridSpec
from diffee.models.matrices import Condition, MatrixRole, SampleMatrix
from diffee.models.params import HyperParams, TvPolicy
from diffee.storage import read_samples, read_sym, write_matrix, write_record

logger = logging.getLogger(__name__)

REPORT_FILE = "report.json"


def register(subparsers: argparse._SubParsersAction) -> None:
    """Add the fit subcommand"""
    parser = subparsers.add_parser(
        "fit",
        help="estimate the differential network from two sample files",
        description="Writes delta.csv (single lambda) or delta_lambda_NN.csv (grid) and report.json.",
    )
    parser.add_argument("--xc", type=Path, required=True, help="samples of condition c")
    parser.add_argument("--xd", type=Path, required=True, help="samples of condition d")
    parser.add_argument(
        "--v", default="auto",
        help="T_v threshold: a number, 'auto' (smallest invertible v on the grid) or 'theory[:a]'",
    )
    lam = parser.add_mutually_exclusive_group(required=True)
    lam.add_argument("--lambda", dest="lam", type=float, help="single regularization level")
    lam.add_argument("--lambda-grid", choices=["paper"], help="30-point grid scaled by sqrt(ln p / min(nc, nd))")
    parser.add_argument("--policy", choices=[p.value for p in TvPolicy], default=TvPolicy.OFF_DIAGONAL_ONLY.value)
    parser.add_argument("--method", choices=["diffee", "naive"], default="diffee")
    parser.add_argument("--truth", type=Path, help="true delta matrix; adds per-lambda F1 to the report")
    parser.add_argument("--v-step", type=float, default=0.001, help="v grid step for --v auto")
    parser.add_argument("--v-size", type=int, default=1000, help="v grid size for --v auto")
    parser.add_argument("--out", type=Path, required=True, help="output directory")
    parser.set_defaults(handler=run)


def resolve_v(spec: str, x_c: SampleMatrix, x_d: SampleMatrix, policy: TvPolicy, v_grid: List[float]) -> Tuple[float, str]:
    """Turn the --v flag into a threshold and the rule that produced it"""
    text = spec.strip().lower()
    if text == "auto":
        return select_v(sample_covariance(x_c), sample_covariance(x_d), v_grid, policy), "auto"
    if text.startswith("theory"):
        _, _, scale = text.partition(":")
        try:
            a = float(scale) if scale else 1.0
        except ValueError:
            raise InvalidInputError(f"bad --v value {spec!r}") from None
        return theoretical_v(x_c.p, x_c.n, x_d.n, a), "theory"
    try:
        v = float(text)
    except ValueError:
        raise InvalidInputError(f"--v must be a number, 'auto' or 'theory[:a]', got {spec!r}") from None
    if v < 0:
        raise InvalidInputError(f"--v must be >= 0, got {v}")
    return v, "fixed"


def _matrix_names(count: int) -> List[str]:
    if count == 1:
        return ["delta.csv"]
    return [f"delta_lambda_{i:02d}.csv" for i in range(1, count + 1)]


def run(args: argparse.Namespace) -> int:
    """Fit one λ or a whole path and write the estimates with a record"""
    x_c = read_samples(args.xc, Condition.CONTROL)
    x_d = read_samples(args.xd, Condition.CASE)
    if x_c.p != x_d.p:
        raise InvalidInputError(f"sample files disagree on p: {x_c.p} vs {x_d.p}")
    policy = TvPolicy(args.policy)
    v_grid = VGridSpec(step=args.v_step, size=args.v_size).values()
    v, v_rule = resolve_v(args.v, x_c, x_d, policy, v_grid)

    estimator = get_estimator(args.method)
    if args.lam is not None:
        estimates: List[DiffEstimate] = [estimator.fit(x_c, x_d, HyperParams.single(v, args.lam, policy))]
    else:
        grid = lambda_grid(x_c.p, x_c.n, x_d.n)
        estimates = estimator.path(x_c, x_d, HyperParams.grid(v, grid, policy))

    out: Path = args.out
    names = _matrix_names(len(estimates))
    for name, estimate in zip(names, estimates):
        write_matrix(out / name, estimate.delta)

    scores: Optional[list] = None
    if args.truth is not None:
        truth = read_sym(args.truth, MatrixRole.DIFFERENTIAL)
        scores = [f1_score(e.delta, truth) for e in estimates]

    sidecar = FitSidecar(
        v=v,
        v_rule=v_rule,
        tv_policy=policy.value,
        lambdas=[e.lambda_ for e in estimates],
        support_sizes=[e.support_size for e in estimates],
        matrix_files=names,
        proxy_seconds=estimates[0].proxy_seconds,
        total_seconds=sum(e.fit_seconds for e in estimates),
        f1=[s.f1 for s in scores] if scores else None,
        precision=[s.precision for s in scores] if scores else None,
        recall=[s.recall for s in scores] if scores else None,
    )
    write_record(out / REPORT_FILE, sidecar)
    logger.info("fit %s v=%g (%s) over %d lambda(s) into %s", args.method, v, v_rule, len(estimates), out)
    return 0
