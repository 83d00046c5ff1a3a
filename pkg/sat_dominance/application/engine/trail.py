from sat_dominance.domain.clauses import Clause
from sat_dominance.domain.exceptions import InvariantViolation
from sat_dominance.domain.formula import Literal

TRUE = 1
FALSE = -1
UNASSIGNED = 0


class Trail:
    """Assignment stack with per-variable level, reason and saved phase."""

    def __init__(self, num_vars: int) -> None:
        self.num_vars = num_vars
        self.values: list[int] = [UNASSIGNED] * (num_vars + 1)
        self.levels: list[int] = [0] * (num_vars + 1)
        self.reasons: list[Clause | None] = [None] * (num_vars + 1)
        self.phases: list[bool] = [False] * (num_vars + 1)
        self.literals: list[Literal] = []
        self.level_starts: list[int] = []
        self.qhead = 0

    def __len__(self) -> int:
        return len(self.literals)

    @property
    def decision_level(self) -> int:
        return len(self.level_starts)

    def value(self, literal: Literal) -> int:
        value = self.values[abs(literal)]

        return value if literal > 0 else -value

    def level(self, literal: Literal) -> int:
        return self.levels[abs(literal)]

    def reason(self, literal: Literal) -> Clause | None:
        return self.reasons[abs(literal)]

    def assign(self, literal: Literal, reason: Clause | None) -> None:
        var = abs(literal)
        self.values[var] = TRUE if literal > 0 else FALSE
        self.levels[var] = self.decision_level
        self.reasons[var] = reason
        self.literals.append(literal)

    def new_decision_level(self) -> None:
        self.level_starts.append(len(self.literals))

    def backjump(self, level: int) -> list[int]:
        """Undoes every assignment above `level`, saving phases. Returns the unassigned variables."""

        if level >= self.decision_level:
            return []

        start = self.level_starts[level]
        unassigned = []
        for literal in reversed(self.literals[start:]):
            var = abs(literal)
            self.phases[var] = literal > 0
            self.values[var] = UNASSIGNED
            self.reasons[var] = None
            unassigned.append(var)

        del self.literals[start:]
        del self.level_starts[level:]
        self.qhead = min(self.qhead, start)

        return unassigned

    def count_at_or_below(self, level: int) -> int:
        if level >= self.decision_level:
            return len(self.literals)

        return self.level_starts[level]

    def model(self) -> list[Literal]:
        return [var if self.values[var] == TRUE else -var for var in range(1, self.num_vars + 1)]

    def check_invariants(self) -> None:
        seen: set[int] = set()
        previous_level = 0
        starts = set(self.level_starts)
        for position, literal in enumerate(self.literals):
            var = abs(literal)
            if var in seen:
                raise InvariantViolation(f"Variable {var} appears twice on the trail.")
            seen.add(var)

            if self.value(literal) != TRUE:
                raise InvariantViolation(f"Trail literal {literal} is not true.")

            level = self.levels[var]
            if level < previous_level:
                raise InvariantViolation(f"Decision levels decrease at trail position {position}.")
            previous_level = level

            reason = self.reasons[var]
            if reason is None:
                if level > 0 and position not in starts:
                    raise InvariantViolation(f"Literal {literal} at level {level} has no reason and is no decision.")
                continue

            if literal not in reason.literals:
                raise InvariantViolation(f"Reason of {literal} does not contain it.")
            for other in reason.literals:
                if other != literal and (self.value(other) != FALSE or self.levels[abs(other)] > level):
                    raise InvariantViolation(f"Reason of {literal} has a non-false literal {other}.")

        if self.level_starts != sorted(self.level_starts) or any(
            start > len(self.literals) for start in self.level_starts
        ):
            raise InvariantViolation("Decision level boundaries are inconsistent with the trail.")
