from collections.abc import Iterable

from pydantic import BaseModel, Field, model_validator

Literal = int


def normalize_clause(literals: Iterable[Literal]) -> list[Literal] | None:
    """Drop duplicate literals keeping first occurrences. Returns None for tautologies."""

    seen: set[Literal] = set()
    clause: list[Literal] = []
    for literal in literals:
        if -literal in seen:
            return None
        if literal in seen:
            continue

        seen.add(literal)
        clause.append(literal)

    return clause


class CnfFormula(BaseModel):
    num_vars: int = Field(ge=0)
    clauses: list[list[Literal]] = Field(default_factory=list)

    @model_validator(mode="after")
    def check_literals(self) -> "CnfFormula":
        for clause in self.clauses:
            for literal in clause:
                if literal == 0 or abs(literal) > self.num_vars:
                    raise ValueError(f"Literal {literal} is outside the variable range [1, {self.num_vars}].")

        return self

    @classmethod
    def from_clauses(cls, num_vars: int, clauses: Iterable[Iterable[Literal]]) -> "CnfFormula":
        normalized = [clause for clause in map(normalize_clause, clauses) if clause is not None]

        return cls(num_vars=num_vars, clauses=normalized)

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    @property
    def has_empty_clause(self) -> bool:
        return any(len(clause) == 0 for clause in self.clauses)

    def canonical(self) -> tuple[int, tuple[tuple[Literal, ...], ...]]:
        """Order-insensitive view used to compare formulas up to clause/literal order."""

        clauses = sorted(tuple(sorted(clause)) for clause in self.clauses)

        return self.num_vars, tuple(clauses)

    def equivalent(self, other: "CnfFormula") -> bool:
        return self.canonical() == other.canonical()

    def is_satisfied_by(self, model: Iterable[Literal]) -> bool:
        true_literals = set(model)

        return all(any(literal in true_literals for literal in clause) for clause in self.clauses)

    def with_units(self, literals: Iterable[Literal]) -> "CnfFormula":
        return CnfFormula(num_vars=self.num_vars, clauses=[*self.clauses, *([literal] for literal in literals)])


class ParsedFormula(BaseModel):
    formula: CnfFormula
    declared_clauses: int
    header_mismatch: bool = False
