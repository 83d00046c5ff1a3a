from dataclasses import dataclass, field

from .formula import Literal


@dataclass(slots=True, eq=False)
class Clause:
    """A clause held by the solver. The first two literals are the watched ones."""

    literals: list[Literal]
    removed: bool = False

    @property
    def size(self) -> int:
        return len(self.literals)

    @property
    def learnt(self) -> bool:
        return False


@dataclass(slots=True, eq=False)
class LearnedClause(Clause):
    lbd: int = 1
    activity: float = 0.0

    def __post_init__(self) -> None:
        if not 1 <= self.lbd <= max(1, len(self.literals)):
            raise ValueError(f"LBD {self.lbd} is outside [1, {len(self.literals)}].")

    @property
    def learnt(self) -> bool:
        return True

    @property
    def protected(self) -> bool:
        return self.size <= 2 or self.lbd <= 2

    @property
    def eligible(self) -> bool:
        """Clauses outside the protected set take part in reduction."""

        return not self.protected

    def update_lbd(self, lbd: int) -> None:
        self.lbd = min(self.lbd, lbd)


@dataclass(slots=True)
class ClauseDatabase:
    """Original clauses (never deleted) plus the learned clauses database."""

    clause_decay: float
    original: list[Clause] = field(default_factory=list)
    learnts: list[LearnedClause] = field(default_factory=list)
    clause_inc: float = 1.0

    @property
    def num_learnts(self) -> int:
        return len(self.learnts)

    def add_learnt(self, clause: LearnedClause) -> None:
        self.learnts.append(clause)

    def remove_learnts(self, doomed: list[LearnedClause]) -> None:
        if not doomed:
            return

        for clause in doomed:
            clause.removed = True
        self.learnts = [clause for clause in self.learnts if not clause.removed]
