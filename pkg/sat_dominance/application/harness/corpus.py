from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import TextIO

import numpy as np
from loguru import logger
from pydantic import BaseModel
from tqdm import tqdm

from sat_dominance.domain.config import RunConfig
from sat_dominance.domain.exceptions import ImproperlyConfigured
from sat_dominance.domain.outcome import CSV_COLUMNS, SUMMARY_INSTANCE, CorpusSummary, InstanceStats
from sat_dominance.domain.types import InstanceStatus
from sat_dominance.infrastructure.files_io import CsvFileManager, JsonFileManager

from .runner import run_instance

CNF_PATTERN = "*.cnf"


class CorpusEntry(BaseModel):
    name: str
    path: Path


class CorpusRun(BaseModel):
    rows: list[InstanceStats]
    summary: CorpusSummary

    def csv_rows(self) -> list[dict[str, str]]:
        return [*(row.to_row() for row in self.rows), self.summary.to_row()]


def collect_instances(source: str | Path) -> list[CorpusEntry]:
    """
    Lists the instances of a corpus in run order.

    A directory contributes every `*.cnf` file below it, sorted by relative path, named by that relative path. Any
    other file is read as a list of instance paths, one per line, relative to the list file; blank lines and `#`
    comments are skipped.

    Raises:
        ImproperlyConfigured: If the source yields no instance.
    """

    source = Path(source)
    if source.is_dir():
        paths = sorted(source.rglob(CNF_PATTERN))
        entries = [CorpusEntry(name=path.relative_to(source).as_posix(), path=path) for path in paths]
    else:
        try:
            lines = source.read_text(encoding="utf-8").splitlines()
        except FileNotFoundError:
            raise ImproperlyConfigured(f"Corpus source '{source}' does not exist.") from None

        entries = []
        for line in lines:
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue

            path = Path(stripped)
            if not path.is_absolute():
                path = source.parent / path
            entries.append(CorpusEntry(name=stripped, path=path))

    if not entries:
        raise ImproperlyConfigured(f"Corpus source '{source}' contains no instance.")

    return entries


def _run_entry(job: tuple[CorpusEntry, RunConfig]) -> InstanceStats:
    entry, config = job

    return run_instance(entry.path, config, name=entry.name)


def run_corpus(source: str | Path, config: RunConfig) -> CorpusRun:
    """
    Solves every instance of a corpus under the run budget and summarizes the results.

    Rows keep input order whatever the number of workers. Unreadable or malformed instances become ERROR rows.
    """

    entries = collect_instances(source)
    logger.info(f"Running {len(entries)} instance(s) with strategy {config.strategy.label}.", jobs=config.jobs)

    jobs = [(entry, config) for entry in entries]
    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as executor:
            rows = list(tqdm(executor.map(_run_entry, jobs), total=len(jobs)))
    else:
        rows = [_run_entry(job) for job in tqdm(jobs)]

    summary = summarize(rows, config.strategy.label)
    logger.info(f"{summary.strategy}: {summary.solved_label}, {summary.errors} error(s).")

    return CorpusRun(rows=rows, summary=summary)


def summarize(rows: Sequence[InstanceStats], strategy: str | None = None) -> CorpusSummary:
    """
    Aggregates instance rows the way result tables report them.

    The average time is taken over solved instances only. The deleted-fraction mean and standard deviation are taken
    over the per-instance means of instances that performed at least one reduction.
    """

    solved = [row for row in rows if row.status.solved]
    reduced = [row.mean_deleted_fraction for row in rows if row.reductions > 0]
    fractions = np.asarray(reduced, dtype=np.float64)

    return CorpusSummary(
        strategy=strategy if strategy is not None else (rows[0].strategy if rows else ""),
        instances=len(rows),
        solved=len(solved),
        sat=sum(row.status == InstanceStatus.SAT for row in rows),
        unsat=sum(row.status == InstanceStatus.UNSAT for row in rows),
        errors=sum(row.status == InstanceStatus.ERROR for row in rows),
        average_time=float(np.mean([row.wall_time for row in solved])) if solved else None,
        instances_reduced=len(reduced),
        deleted_fraction_mean=float(fractions.mean()) if fractions.size else None,
        deleted_fraction_std=float(fractions.std()) if fractions.size else None,
    )


def write_stats(run: CorpusRun, destination: str | Path | TextIO) -> None:
    if isinstance(destination, str | Path):
        path = CsvFileManager.write(destination, CSV_COLUMNS, run.csv_rows())
        logger.info(f"Statistics written to {path}.")
    else:
        CsvFileManager.write_stream(destination, CSV_COLUMNS, run.csv_rows())


def write_summary(summary: CorpusSummary, path: str | Path) -> Path:
    path = JsonFileManager.write(path, summary.model_dump(mode="json"))
    logger.info(f"Summary written to {path}.")

    return path


def load_stats(path: str | Path) -> list[InstanceStats]:
    """Reads the instance rows of a statistics CSV, skipping its summary row."""

    return [InstanceStats.from_row(row) for row in CsvFileManager.read(path) if row["instance"] != SUMMARY_INSTANCE]


def load_runs(paths: Iterable[str | Path]) -> dict[str, list[InstanceStats]]:
    """
    Groups the rows of several statistics CSVs by strategy label.

    A label already seen in an earlier file is suffixed with the file stem so that runs never merge.
    """

    runs: dict[str, list[InstanceStats]] = {}
    for path in map(Path, paths):
        grouped: dict[str, list[InstanceStats]] = {}
        for row in load_stats(path):
            grouped.setdefault(row.strategy, []).append(row)

        for strategy, rows in grouped.items():
            key = strategy
            if key in runs:
                key = f"{strategy}@{path.stem}"
                logger.warning(f"Strategy {strategy} appears in several files; rows of {path} are keyed {key}.")
            runs[key] = rows

    return runs
