import argparse
import logging
import tomllib
from pathlib import Path

from pydantic import ValidationError

from diffee.core.config import settings
from diffee.core.errors import InvalidInputError
from diffee.evaluation import run_experiment
from diffee.models.experiment import PRESET_NAMES, ExperimentConfig, preset
from diffee.storage import AGGREGATE_COLUMNS, RUN_COLUMNS, aggregate_rows, write_results

logger = logging.getLogger(__name__)

SCHEMA_HELP = (
    "outputs:\n"
    f"  runs.csv       {','.join(RUN_COLUMNS)}\n"
    f"  aggregate.csv  {','.join(AGGREGATE_COLUMNS)}\n"
    "timing columns are empty under --omit-timing\n"
    "reruns with the same config are byte-identical only under --omit-timing;\n"
    "recorded timings force --jobs 1"
)


def register(subparsers: argparse._SubParsersAction) -> None:
    """Add the bench subcommand"""
    parser = subparsers.add_parser(
        "bench",
        help="run a synthetic experiment sweep and write result CSVs",
        description="Runs every (cell x seed x method) of a TOML config or a named preset.",
        epilog=SCHEMA_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("config", nargs="?", type=Path, help="TOML experiment config")
    source.add_argument("--preset", choices=PRESET_NAMES, help="published experiment set")
    parser.add_argument("--model", choices=["1", "2"], help="graph model for --preset (default 2)")
    parser.add_argument("--seeds", type=int, help="use seeds 0..N-1 instead of the configured ones")
    parser.add_argument("--jobs", type=int, default=None, help="cells run concurrently (default from settings)")
    parser.add_argument("--omit-timing", action="store_true", help="blank timing columns for byte-stable output")
    parser.add_argument("--out", type=Path, help="output directory (overrides the config)")
    parser.set_defaults(handler=run)


def load_config(path: Path) -> ExperimentConfig:
    """Parse and validate a TOML experiment config"""
    try:
        with path.open("rb") as handle:
            raw = tomllib.load(handle)
    except (OSError, tomllib.TOMLDecodeError) as exc:
        raise InvalidInputError(f"cannot read config {path}: {exc}") from exc
    try:
        return ExperimentConfig.model_validate(raw)
    except ValidationError as exc:
        raise InvalidInputError(f"invalid config {path}: {exc}") from exc


def build_config(args: argparse.Namespace) -> ExperimentConfig:
    """Config file or preset, with command-line overrides applied"""
    try:
        config = load_config(args.config) if args.config else preset(args.preset, args.model or 2)
        updates = {}
        if args.seeds is not None:
            updates["seeds"] = list(range(args.seeds))
        if args.omit_timing:
            updates["record_timing"] = False
        if args.out is not None:
            updates["output_dir"] = str(args.out)
        return ExperimentConfig.model_validate({**config.model_dump(), **updates})
    except (ValidationError, ValueError) as exc:
        if isinstance(exc, InvalidInputError):
            raise
        raise InvalidInputError(f"invalid experiment: {exc}") from exc


def run(args: argparse.Namespace) -> int:
    """Run the sweep, write runs.csv and aggregate.csv, print the aggregate"""
    config = build_config(args)
    jobs = args.jobs if args.jobs is not None else settings.JOBS
    if jobs < 1:
        raise InvalidInputError("--jobs must be >= 1")
    if jobs > 1 and config.record_timing:
        logger.warning(
            "timings are recorded, so running with --jobs 1 instead of %d; pass --omit-timing to run in parallel",
            jobs,
        )
        jobs = 1

    reports = run_experiment(config, jobs=jobs)
    out = Path(config.output_dir or settings.OUTPUT_DIR)
    write_results(out, reports, config.record_timing)

    print(aggregate_rows(reports).to_string(index=False))
    failed = [r for r in reports if not r.ok]
    for report in failed:
        print(f"FAILED {report.error}")
    return 0 if len(failed) < len(reports) else 1
