from collections.abc import Callable
from pathlib import Path

import pytest

from sat_dominance.domain.clauses import ClauseDatabase, LearnedClause
from sat_dominance.domain.measures import MeasureVector

ClauseFactory = Callable[..., LearnedClause]

NUM_VARS = 100


def _make_clause(size: int, lbd: int, activity: float = 0.0, first_var: int = 1) -> LearnedClause:
    return LearnedClause(list(range(first_var, first_var + size)), lbd=lbd, activity=activity)


@pytest.fixture
def clause_factory() -> ClauseFactory:
    return _make_clause


@pytest.fixture
def motivating_vectors() -> list[MeasureVector]:
    """Three learned clauses where only the second one is dominated (by the third) on size, LBD and activity."""

    return [
        MeasureVector(size=8, lbd=3, activity=1e100),
        MeasureVector(size=6, lbd=5, activity=1e200),
        MeasureVector(size=5, lbd=4, activity=1e300),
    ]


@pytest.fixture
def motivating_clauses(motivating_vectors: list[MeasureVector]) -> list[LearnedClause]:
    return [_make_clause(vector.size, vector.lbd, vector.activity) for vector in motivating_vectors]


@pytest.fixture
def motivating_db(motivating_clauses: list[LearnedClause]) -> ClauseDatabase:
    return ClauseDatabase(clause_decay=0.999, learnts=list(motivating_clauses))


@pytest.fixture
def write_cnf(tmp_path: Path) -> Callable[[str, str], Path]:
    def _write(name: str, text: str) -> Path:
        path = tmp_path / name
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")

        return path

    return _write
