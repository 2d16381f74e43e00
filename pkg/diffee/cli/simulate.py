import argparse
import logging
from pathlib import Path

from diffee.core.errors import InvalidInputError
from diffee.datagen import generate, sample_pair
from diffee.datagen.model1 import GRAPH_LAW
from diffee.models.truth import GraphModel, SimulationManifest
from diffee.storage import write_matrix, write_record

logger = logging.getLogger(__name__)

MATRIX_FILES = ("X_c.csv", "X_d.csv", "omega_c.csv", "omega_d.csv", "delta_star.csv")
MANIFEST_FILE = "manifest.json"


def register(subparsers: argparse._SubParsersAction) -> None:
    """Add the simulate subcommand"""
    parser = subparsers.add_parser(
        "simulate",
        help="generate a ground-truth graph pair and Gaussian samples",
        description="Write X_c, X_d, omega_c, omega_d and delta_star as comma-separated "
                    "matrix files plus manifest.json to the output directory.",
    )
    parser.add_argument("--model", choices=["1", "2"], required=True, help="graph-pair generator")
    parser.add_argument("--p", type=int, required=True, help="number of variables (>= 10)")
    parser.add_argument("--s", type=float, default=0.2, help="sparsity parameter (default 0.2)")
    parser.add_argument("--nc", type=int, help="samples for condition c (default p/2)")
    parser.add_argument("--nd", type=int, help="samples for condition d (default p/2)")
    parser.add_argument("--seed", type=int, default=0, help="non-negative seed (default 0)")
    parser.add_argument("--out", type=Path, required=True, help="output directory")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    """Generate a truth, draw both sample blocks and write them with a manifest"""
    n_c = args.nc if args.nc is not None else max(2, args.p // 2)
    n_d = args.nd if args.nd is not None else max(2, args.p // 2)
    if args.seed < 0:
        raise InvalidInputError("--seed must be non-negative")
    truth = generate(args.model, args.p, args.s, args.seed)
    x_c, x_d = sample_pair(truth, n_c, n_d)

    out: Path = args.out
    for name, matrix in zip(MATRIX_FILES, (x_c, x_d, truth.omega_c, truth.omega_d, truth.delta_star)):
        write_matrix(out / name, matrix)
    manifest = SimulationManifest(
        model=truth.model,
        p=truth.p,
        s=truth.s,
        n_c=n_c,
        n_d=n_d,
        seed=truth.seed,
        k=truth.k,
        delta_c=truth.delta_c,
        delta_d=truth.delta_d,
        pd_boost=truth.pd_boost,
        hubs=truth.hubs,
        edge_count=truth.edge_count,
        hub_edge_pooling="pooled across both hubs" if truth.model is GraphModel.MODEL1 else None,
        graph_law=GRAPH_LAW if truth.model is GraphModel.MODEL1 else None,
        files=list(MATRIX_FILES),
    )
    write_record(out / MANIFEST_FILE, manifest)
    logger.info("simulated %s p=%d s=%g seed=%d into %s", truth.model.value, truth.p, truth.s, truth.seed, out)
    return 0
