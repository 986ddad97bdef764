"""Timing harness for full-enumeration runs.

Each (engine, n) cell is measured by running the compiled checksum fold
(the anti-elision sink) to completion, one repetition after another on a
single thread.  The monotonic clock wraps only the generation loop; Bell
cross-checks, configuration handling and JIT compilation happen outside
the timed region.  Warmup runs are timed against the cell budget but
never enter the statistics.

Medians are reported rather than means: they shrug off scheduler spikes.
Process CPU time is recorded alongside wall time and lands in the CSV as
an extra column.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from statistics import median
from typing import Optional

from . import engines as _engines
from .bell import bell_exact
from .engines import ENGINES, FULL_RUN_MAX_N


@dataclass(frozen=True)
class BenchConfig:
    """Knobs for one benchmark sweep.

    time_budget_per_cell caps the wall-clock time spent in one (engine, n)
    cell; a cell that exceeds it is truncated after the current repetition,
    but always completes at least one measured repetition.
    """

    n_min: int
    n_max: int
    engines: tuple[str, ...] = ENGINES
    repetitions: int = 5
    warmup_runs: int = 1
    time_budget_per_cell: Optional[float] = None

    def __post_init__(self):
        if not 1 <= self.n_min <= self.n_max <= FULL_RUN_MAX_N:
            raise ValueError(
                f"need 1 <= n_min <= n_max <= {FULL_RUN_MAX_N}, "
                f"got {self.n_min}..{self.n_max}"
            )
        for engine in self.engines:
            if engine not in ENGINES:
                raise ValueError(f"unknown engine {engine!r}")
        if not self.engines:
            raise ValueError("engines must not be empty")
        if self.repetitions < 1:
            raise ValueError("repetitions must be >= 1")
        if self.warmup_runs < 0:
            raise ValueError("warmup_runs must be >= 0")
        if self.time_budget_per_cell is not None and self.time_budget_per_cell <= 0:
            raise ValueError("time_budget_per_cell must be positive")


@dataclass(frozen=True)
class BenchRecord:
    """One measured (engine, n) cell."""

    engine: str
    n: int
    median_ms: float
    min_ms: float
    max_ms: float
    repetitions_done: int
    checksum: int
    partitions_counted: int
    cpu_median_ms: Optional[float] = None

    def __post_init__(self):
        if not self.min_ms <= self.median_ms <= self.max_ms:
            raise ValueError("per-record timing order violated")
        if self.repetitions_done < 1:
            raise ValueError("a record needs at least one repetition")


def run_benchmark(config: BenchConfig) -> list[BenchRecord]:
    """Measure every (engine, n) cell of the config, engine-major order."""
    records = []
    for engine in config.engines:
        _engines.fold_all(engine, 1)  # force JIT compilation outside timing
        for n in range(config.n_min, config.n_max + 1):
            records.append(_run_cell(engine, n, config))
    return records


def _run_cell(engine: str, n: int, config: BenchConfig) -> BenchRecord:
    expected = bell_exact(n).value
    budget = config.time_budget_per_cell
    cell_start = time.perf_counter()

    for _ in range(config.warmup_runs):
        _engines.fold_all(engine, n)
        if budget is not None and time.perf_counter() - cell_start >= budget:
            break

    wall_ms: list[float] = []
    cpu_ms: list[float] = []
    checksum = None
    for _ in range(config.repetitions):
        cpu0 = time.process_time()
        t0 = time.perf_counter()
        count, acc = _engines.fold_all(engine, n)
        wall_ms.append((time.perf_counter() - t0) * 1e3)
        cpu_ms.append((time.process_time() - cpu0) * 1e3)
        if count != expected:
            raise RuntimeError(
                f"{engine} emitted {count} partitions for n={n}, expected {expected}"
            )
        if checksum is None:
            checksum = acc
        elif acc != checksum:
            raise RuntimeError(
                f"nondeterministic checksum from {engine} at n={n}: "
                f"{acc:#018x} vs {checksum:#018x}"
            )
        if budget is not None and time.perf_counter() - cell_start >= budget:
            break

    return BenchRecord(
        engine=engine,
        n=n,
        median_ms=median(wall_ms),
        min_ms=min(wall_ms),
        max_ms=max(wall_ms),
        repetitions_done=len(wall_ms),
        checksum=checksum,
        partitions_counted=expected,
        cpu_median_ms=median(cpu_ms),
    )


def render_table(records: list[BenchRecord], format: str = "markdown") -> str:
    """Render records as a markdown grid or long-format CSV.

    Markdown: one row per engine, one column per n, medians rounded to
    whole milliseconds.  CSV: engine-major then n-ascending, LF endings.
    Rendering is deterministic: same records, same bytes.
    """
    if not records:
        raise ValueError("no records to render")
    if format == "markdown":
        return _render_markdown(records)
    if format == "csv":
        return _render_csv(records)
    raise ValueError(f"unknown format {format!r} (markdown or csv)")


def _engine_order(records):
    seen = []
    for r in records:
        if r.engine not in seen:
            seen.append(r.engine)
    return seen


def _render_markdown(records) -> str:
    ns = sorted({r.n for r in records})
    cells = {(r.engine, r.n): r for r in records}
    lines = ["| engine | " + " | ".join(str(n) for n in ns) + " |"]
    lines.append("|---" * (len(ns) + 1) + "|")
    for engine in _engine_order(records):
        row = [engine]
        for n in ns:
            r = cells.get((engine, n))
            row.append(str(round(r.median_ms)) if r is not None else "")
        lines.append("| " + " | ".join(row) + " |")
    return "\n".join(lines) + "\n"


def _render_csv(records) -> str:
    order = {e: i for i, e in enumerate(_engine_order(records))}
    rows = sorted(records, key=lambda r: (order[r.engine], r.n))
    lines = ["engine,n,median_ms,min_ms,max_ms,repetitions,checksum,cpu_median_ms"]
    for r in rows:
        cpu = f"{r.cpu_median_ms:.6f}" if r.cpu_median_ms is not None else ""
        lines.append(
            f"{r.engine},{r.n},{r.median_ms:.6f},{r.min_ms:.6f},{r.max_ms:.6f},"
            f"{r.repetitions_done},{r.checksum:#018x},{cpu}"
        )
    return "\n".join(lines) + "\n"
