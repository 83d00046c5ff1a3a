from collections.abc import Iterable, Mapping, Sequence
from pathlib import Path

from pydantic import BaseModel

from sat_dominance.domain.outcome import InstanceStats

from .corpus import load_runs, load_stats

CACTUS_COLUMNS = ("strategy", "rank", "time")
DELETION_PROFILE_COLUMNS = ("instance", "strategy", "mean_deleted_fraction", "wall_time", "avg_resolution_time")


class DeletionProfilePoint(BaseModel):
    instance: str
    strategy: str
    mean_deleted_fraction: float
    wall_time: float
    avg_resolution_time: float | None = None

    def to_row(self) -> dict[str, str]:
        return {
            "instance": self.instance,
            "strategy": self.strategy,
            "mean_deleted_fraction": f"{self.mean_deleted_fraction:.6f}",
            "wall_time": f"{self.wall_time:.4f}",
            "avg_resolution_time": "" if self.avg_resolution_time is None else f"{self.avg_resolution_time:.6f}",
        }


def cactus_series(rows: Sequence[InstanceStats]) -> list[tuple[int, float]]:
    """Solved wall times sorted ascending, as 1-based (rank, time) pairs."""

    times = sorted(row.wall_time for row in rows if row.status.solved)

    return [(rank, time) for rank, time in enumerate(times, start=1)]


def cactus_table(runs: Mapping[str, Sequence[InstanceStats]]) -> dict[str, list[tuple[int, float]]]:
    return {strategy: cactus_series(rows) for strategy, rows in runs.items()}


def emit_cactus(csv_files: Iterable[str | Path]) -> dict[str, list[tuple[int, float]]]:
    """Per strategy, the plot data of an instances-solved versus time curve."""

    return cactus_table(load_runs(csv_files))


def cactus_rows(table: Mapping[str, Sequence[tuple[int, float]]]) -> list[dict[str, str]]:
    return [
        {"strategy": strategy, "rank": str(rank), "time": f"{time:.4f}"}
        for strategy, series in table.items()
        for rank, time in series
    ]


def deletion_profile(rows: Sequence[InstanceStats]) -> list[DeletionProfilePoint]:
    return [
        DeletionProfilePoint(
            instance=row.instance,
            strategy=row.strategy,
            mean_deleted_fraction=row.mean_deleted_fraction,
            wall_time=row.wall_time,
            avg_resolution_time=row.avg_resolution_time,
        )
        for row in rows
        if row.status.solved
    ]


def emit_deletion_profile(csv_file: str | Path) -> list[DeletionProfilePoint]:
    """Mean deleted fraction against solving time for every solved instance of a run."""

    return deletion_profile(load_stats(csv_file))
