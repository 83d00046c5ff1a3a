from collections.abc import Iterator
from typing import Protocol

from pydantic import BaseModel, ConfigDict, Field, RootModel, field_validator

from .types import MeasureId


class HasMeasures(Protocol):
    """Anything exposing the raw values of the relevance measures."""

    @property
    def size(self) -> int: ...

    @property
    def lbd(self) -> int: ...

    @property
    def activity(self) -> float: ...


class MeasureSet(RootModel[tuple[MeasureId, ...]]):
    """The ordered set M of relevance measures a strategy compares clauses on."""

    model_config = ConfigDict(frozen=True)

    root: tuple[MeasureId, ...] = Field(min_length=1)

    @field_validator("root")
    @classmethod
    def check_unique(cls, measures: tuple[MeasureId, ...]) -> tuple[MeasureId, ...]:
        if len(set(measures)) != len(measures):
            raise ValueError(f"Duplicate measures in {[m.value for m in measures]}.")

        return measures

    @classmethod
    def parse(cls, text: str) -> "MeasureSet":
        names = [name.strip().lower() for name in text.split(",") if name.strip()]

        return cls(tuple(MeasureId(name) for name in names))

    @classmethod
    def default(cls) -> "MeasureSet":
        return cls((MeasureId.SIZE, MeasureId.LBD, MeasureId.CVSIDS))

    def __iter__(self) -> Iterator[MeasureId]:  # type: ignore[override]
        return iter(self.root)

    def __len__(self) -> int:
        return len(self.root)

    def __contains__(self, measure: object) -> bool:
        return measure in self.root

    def __str__(self) -> str:
        return ",".join(measure.value for measure in self.root)


class MeasureVector(BaseModel):
    model_config = ConfigDict(frozen=True)

    size: int = Field(ge=1)
    lbd: int = Field(ge=1)
    activity: float = Field(ge=0.0)

    @classmethod
    def of(cls, item: HasMeasures) -> "MeasureVector":
        return cls(size=item.size, lbd=item.lbd, activity=item.activity)

    def value(self, measure: MeasureId) -> float:
        return measure.value_of(self)


class NormalizedVector(BaseModel):
    """Normalized measure values in [0, 1]; smaller is preferred on every component."""

    model_config = ConfigDict(frozen=True)

    components: dict[MeasureId, float]

    @field_validator("components")
    @classmethod
    def check_unit_interval(cls, components: dict[MeasureId, float]) -> dict[MeasureId, float]:
        for measure, value in components.items():
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"Normalized {measure.value} = {value} is outside [0, 1].")

        return components

    def __getitem__(self, measure: MeasureId) -> float:
        return self.components[measure]

    def dominates_componentwise(self, other: "NormalizedVector") -> bool:
        return all(value <= other.components[measure] for measure, value in self.components.items())
