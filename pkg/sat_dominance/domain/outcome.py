from pydantic import BaseModel, Field, model_validator

from .formula import Literal
from .types import InstanceStatus, SolveStatus

CSV_COLUMNS = (
    "instance",
    "strategy",
    "status",
    "wall_time",
    "conflicts",
    "decisions",
    "propagations",
    "restarts",
    "reductions",
    "total_learned",
    "total_deleted",
    "mean_deleted_fraction",
    "deleted_fraction_std",
    "reference_selections",
    "avg_resolution_time",
    "oracle_agreement",
)
WALL_TIME_COLUMNS = ("wall_time", "avg_resolution_time")
SUMMARY_INSTANCE = "SUMMARY"


class SearchStats(BaseModel):
    conflicts: int = 0
    decisions: int = 0
    propagations: int = 0
    restarts: int = 0
    reductions: int = 0
    learned: int = 0
    deleted: int = 0
    reference_selections: int = 0
    deleted_fractions: list[float] = Field(default_factory=list)

    @property
    def mean_deleted_fraction(self) -> float:
        if not self.deleted_fractions:
            return 0.0

        return sum(self.deleted_fractions) / len(self.deleted_fractions)

    def counters(self) -> tuple[int, ...]:
        return (
            self.conflicts,
            self.decisions,
            self.propagations,
            self.restarts,
            self.reductions,
            self.learned,
            self.deleted,
            self.reference_selections,
        )


class SolveOutcome(BaseModel):
    status: SolveStatus
    model: list[Literal] | None = None
    stats: SearchStats = Field(default_factory=SearchStats)
    learned_trace: list[list[Literal]] = Field(default_factory=list, exclude=True)

    @model_validator(mode="after")
    def check_model(self) -> "SolveOutcome":
        if (self.status == SolveStatus.SAT) != (self.model is not None):
            raise ValueError("A model is present if and only if the status is SAT.")

        return self


class InstanceStats(BaseModel):
    instance: str
    strategy: str
    status: InstanceStatus
    wall_time: float = Field(default=0.0, ge=0.0)
    conflicts: int = Field(default=0, ge=0)
    decisions: int = Field(default=0, ge=0)
    propagations: int = Field(default=0, ge=0)
    restarts: int = Field(default=0, ge=0)
    reductions: int = Field(default=0, ge=0)
    total_learned: int = Field(default=0, ge=0)
    total_deleted: int = Field(default=0, ge=0)
    mean_deleted_fraction: float = Field(default=0.0, ge=0.0, le=1.0)
    reference_selections: int = Field(default=0, ge=0)
    oracle_agreement: bool | None = None

    @model_validator(mode="after")
    def check_fraction(self) -> "InstanceStats":
        if self.reductions == 0 and self.mean_deleted_fraction != 0.0:
            raise ValueError("The mean deleted fraction must be 0 when no reduction was performed.")

        return self

    @property
    def avg_resolution_time(self) -> float | None:
        """Wall time divided by the number of reductions; undefined without reductions."""

        if self.reductions == 0:
            return None

        return self.wall_time / self.reductions

    def to_row(self) -> dict[str, str]:
        avg_resolution_time = self.avg_resolution_time
        agreement = "" if self.oracle_agreement is None else str(self.oracle_agreement).lower()

        return {
            "instance": self.instance,
            "strategy": self.strategy,
            "status": self.status.value,
            "wall_time": f"{self.wall_time:.4f}",
            "conflicts": str(self.conflicts),
            "decisions": str(self.decisions),
            "propagations": str(self.propagations),
            "restarts": str(self.restarts),
            "reductions": str(self.reductions),
            "total_learned": str(self.total_learned),
            "total_deleted": str(self.total_deleted),
            "mean_deleted_fraction": f"{self.mean_deleted_fraction:.6f}",
            "deleted_fraction_std": "",
            "reference_selections": str(self.reference_selections),
            "avg_resolution_time": "" if avg_resolution_time is None else f"{avg_resolution_time:.6f}",
            "oracle_agreement": agreement,
        }

    @classmethod
    def from_row(cls, row: dict[str, str]) -> "InstanceStats":
        agreement = row.get("oracle_agreement", "")

        return cls(
            instance=row["instance"],
            strategy=row["strategy"],
            status=InstanceStatus(row["status"]),
            wall_time=float(row["wall_time"] or 0.0),
            conflicts=int(row["conflicts"] or 0),
            decisions=int(row["decisions"] or 0),
            propagations=int(row["propagations"] or 0),
            restarts=int(row["restarts"] or 0),
            reductions=int(row["reductions"] or 0),
            total_learned=int(row["total_learned"] or 0),
            total_deleted=int(row["total_deleted"] or 0),
            mean_deleted_fraction=float(row["mean_deleted_fraction"] or 0.0),
            reference_selections=int(row["reference_selections"] or 0),
            oracle_agreement=None if agreement == "" else agreement == "true",
        )


class CorpusSummary(BaseModel):
    strategy: str
    instances: int = Field(ge=0)
    solved: int = Field(ge=0)
    sat: int = Field(ge=0)
    unsat: int = Field(ge=0)
    errors: int = Field(default=0, ge=0)
    average_time: float | None = None
    instances_reduced: int = Field(default=0, ge=0)
    deleted_fraction_mean: float | None = None
    deleted_fraction_std: float | None = None

    @model_validator(mode="after")
    def check_solved(self) -> "CorpusSummary":
        if self.solved != self.sat + self.unsat:
            raise ValueError("#Solved must equal #SAT + #UNSAT.")

        return self

    @property
    def solved_label(self) -> str:
        return f"#Solved={self.solved} ({self.sat}-{self.unsat})"

    def to_row(self) -> dict[str, str]:
        row = dict.fromkeys(CSV_COLUMNS, "")
        row["instance"] = SUMMARY_INSTANCE
        row["strategy"] = self.strategy
        row["status"] = self.solved_label
        if self.average_time is not None:
            row["wall_time"] = f"{self.average_time:.4f}"
        if self.deleted_fraction_mean is not None:
            row["mean_deleted_fraction"] = f"{self.deleted_fraction_mean:.6f}"
        if self.deleted_fraction_std is not None:
            row["deleted_fraction_std"] = f"{self.deleted_fraction_std:.6f}"

        return row
