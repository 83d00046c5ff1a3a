from enum import StrEnum


class ParseErrorKind(StrEnum):
    BAD_HEADER = "bad header"
    BAD_TOKEN = "bad token"
    VAR_OUT_OF_RANGE = "variable out of range"
    TRUNCATED = "truncated"


class Direction(StrEnum):
    SMALLER_PREFERRED = "smaller_preferred"
    LARGER_PREFERRED = "larger_preferred"


class MeasureId(StrEnum):
    SIZE = "size"
    LBD = "lbd"
    CVSIDS = "cvsids"

    @property
    def direction(self) -> Direction:
        if self == MeasureId.CVSIDS:
            return Direction.LARGER_PREFERRED

        return Direction.SMALLER_PREFERRED

    @property
    def attribute(self) -> str:
        """Name of the attribute holding the raw value on clauses and measure vectors."""

        if self == MeasureId.CVSIDS:
            return "activity"

        return self.value

    def value_of(self, item: object) -> float:
        return getattr(item, self.attribute)


class Preference(StrEnum):
    A_PREFERRED = "a_preferred"
    B_PREFERRED = "b_preferred"
    TIE = "tie"


class StrategyKind(StrEnum):
    NONE = "none"
    SORT_HALF = "sort_half"
    DOMINANCE = "dominance"


class SolveStatus(StrEnum):
    SAT = "SAT"
    UNSAT = "UNSAT"
    UNKNOWN = "UNKNOWN"


class InstanceStatus(StrEnum):
    SAT = "SAT"
    UNSAT = "UNSAT"
    UNKNOWN = "UNKNOWN"
    ERROR = "ERROR"

    @property
    def solved(self) -> bool:
        return self in (InstanceStatus.SAT, InstanceStatus.UNSAT)
