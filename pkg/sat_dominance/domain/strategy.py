from loguru import logger
from pydantic import BaseModel, ConfigDict, Field, model_validator

from .exceptions import ImproperlyConfigured
from .measures import MeasureSet, MeasureVector
from .types import MeasureId, StrategyKind

STRATEGY_NAMES = ("none", "size", "lbd", "cvsids", "degcomp")


class ReductionStrategy(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: StrategyKind
    criterion: MeasureId | None = None
    measures: MeasureSet = Field(default_factory=MeasureSet.default)

    @model_validator(mode="after")
    def check_kind(self) -> "ReductionStrategy":
        if self.kind == StrategyKind.SORT_HALF and self.criterion is None:
            raise ValueError("Sort-half reduction requires a criterion.")
        if self.kind != StrategyKind.SORT_HALF and self.criterion is not None:
            raise ValueError(f"A criterion is meaningless for {self.kind.value} reduction.")
        if self.kind == StrategyKind.DOMINANCE and len(self.measures) == 1:
            logger.warning(
                f"Dominance reduction over the single measure {self.measures} degenerates to best-clause comparison."
            )

        return self

    @classmethod
    def none(cls) -> "ReductionStrategy":
        return cls(kind=StrategyKind.NONE)

    @classmethod
    def sort_half(cls, criterion: MeasureId) -> "ReductionStrategy":
        return cls(kind=StrategyKind.SORT_HALF, criterion=criterion)

    @classmethod
    def dominance(cls, measures: MeasureSet | None = None) -> "ReductionStrategy":
        return cls(kind=StrategyKind.DOMINANCE, measures=measures or MeasureSet.default())

    @classmethod
    def from_name(cls, name: str, measures: str | MeasureSet | None = None) -> "ReductionStrategy":
        name = name.strip().lower()
        if name == "none":
            return cls.none()
        if name == "degcomp":
            if isinstance(measures, str):
                measures = MeasureSet.parse(measures)

            return cls.dominance(measures)
        if name in (m.value for m in MeasureId):
            return cls.sort_half(MeasureId(name))

        raise ImproperlyConfigured(f"Unknown strategy '{name}'. Expected one of {', '.join(STRATEGY_NAMES)}.")

    @property
    def name(self) -> str:
        if self.kind == StrategyKind.NONE:
            return "none"
        if self.kind == StrategyKind.SORT_HALF:
            return self.criterion.value

        return "degcomp"

    @property
    def label(self) -> str:
        """Strategy name plus the measure set for dominance runs, as written in result files."""

        if self.kind == StrategyKind.DOMINANCE and self.measures != MeasureSet.default():
            return f"degcomp[{self.measures}]"

        return self.name


class ReductionReport(BaseModel):
    before: int = Field(ge=0)
    deleted: int = Field(ge=0)
    protected_kept: int = Field(ge=0)
    reference: MeasureVector | None = None
    deleted_measures: list[MeasureVector] = Field(default_factory=list, exclude=True)

    @model_validator(mode="after")
    def check_counts(self) -> "ReductionReport":
        if self.deleted > self.before:
            raise ValueError(f"Deleted {self.deleted} clauses out of {self.before}.")

        return self

    @property
    def kept(self) -> int:
        return self.before - self.deleted

    @property
    def deleted_fraction(self) -> float:
        if self.before == 0:
            return 0.0

        return self.deleted / self.before
