from diffee.storage.matrix_files import read_matrix, read_samples, read_sym, write_matrix
from diffee.storage.records import (
    AGGREGATE_COLUMNS,
    RUN_COLUMNS,
    aggregate_rows,
    run_rows,
    write_record,
    write_results,
)

__all__ = [
    "AGGREGATE_COLUMNS",
    "RUN_COLUMNS",
    "aggregate_rows",
    "read_matrix",
    "read_samples",
    "read_sym",
    "run_rows",
    "write_matrix",
    "write_record",
    "write_results",
]
