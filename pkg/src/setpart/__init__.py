"""Set partition enumeration, Bell numbers and a benchmarking harness."""

from .bell import (
    BELL_NUMBERS_1_TO_20,
    ExactBell,
    LogApprox,
    bell_berend_tassa,
    bell_exact,
    bell_moser_wyman,
    bell_triangle,
    log_bell_exact,
    relative_error_mw,
)
from .bench import BenchConfig, BenchRecord, render_table, run_benchmark
from .engines import (
    ENGINES,
    BlockPartition,
    RestrictedGrowthString,
    blocks_to_rgs,
    checksum_all,
    count_all,
    fold_all,
    is_valid_rgs,
    make_generator,
    rgs_first,
    rgs_successor,
    rgs_to_blocks,
)
from .lambertw import WSolution, lambert_w0

__version__ = "0.1.0"

__all__ = [
    "BELL_NUMBERS_1_TO_20",
    "BenchConfig",
    "BenchRecord",
    "BlockPartition",
    "ENGINES",
    "ExactBell",
    "LogApprox",
    "RestrictedGrowthString",
    "WSolution",
    "bell_berend_tassa",
    "bell_exact",
    "bell_moser_wyman",
    "bell_triangle",
    "blocks_to_rgs",
    "checksum_all",
    "count_all",
    "fold_all",
    "is_valid_rgs",
    "lambert_w0",
    "log_bell_exact",
    "make_generator",
    "relative_error_mw",
    "render_table",
    "rgs_first",
    "rgs_successor",
    "rgs_to_blocks",
    "run_benchmark",
    "__version__",
]
