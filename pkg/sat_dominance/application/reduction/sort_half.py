from collections.abc import Set

from sat_dominance.domain.clauses import ClauseDatabase, LearnedClause
from sat_dominance.domain.strategy import ReductionReport
from sat_dominance.domain.types import Direction, MeasureId

from .base import ReductionHandler, apply_deletion, deletable


def worst_first(clauses: list[LearnedClause], criterion: MeasureId) -> list[LearnedClause]:
    """Orders clauses from least to most relevant on the criterion; ties keep database order."""

    reverse = criterion.direction == Direction.SMALLER_PREFERRED

    # sorted() is stable, and reverse=True keeps the original order of equal keys.
    return sorted(clauses, key=criterion.value_of, reverse=reverse)


def reduce_sort_half(
    db: ClauseDatabase, criterion: MeasureId, locked: Set[LearnedClause] = frozenset()
) -> ReductionReport:
    before = db.num_learnts
    limit = before // 2
    candidates = worst_first(db.learnts, criterion)[:limit]
    doomed = [clause for clause in candidates if deletable(clause, locked)]

    return apply_deletion(db, doomed, before)


class SortHalfReductionHandler(ReductionHandler):
    def __init__(self, criterion: MeasureId) -> None:
        self._criterion = criterion

    def reduce(self, db: ClauseDatabase, locked: Set[LearnedClause], num_vars: int) -> ReductionReport:
        return reduce_sort_half(db, self._criterion, locked)
