from abc import ABC, abstractmethod
from collections.abc import Iterable, Set

from sat_dominance.domain.clauses import ClauseDatabase, LearnedClause
from sat_dominance.domain.measures import MeasureVector
from sat_dominance.domain.strategy import ReductionReport


class ReductionHandler(ABC):
    """
    Abstract class for all learned-clause database reduction strategies.
    Handlers delete clauses from the database in place and describe what they did in a report.
    """

    @abstractmethod
    def reduce(self, db: ClauseDatabase, locked: Set[LearnedClause], num_vars: int) -> ReductionReport:
        pass


def deletable(clause: LearnedClause, locked: Set[LearnedClause]) -> bool:
    return clause.eligible and clause not in locked


def apply_deletion(
    db: ClauseDatabase,
    doomed: list[LearnedClause],
    before: int,
    reference: MeasureVector | None = None,
) -> ReductionReport:
    deleted_measures = [MeasureVector.of(clause) for clause in doomed]
    db.remove_learnts(doomed)

    return ReductionReport(
        before=before,
        deleted=len(doomed),
        protected_kept=_count_protected(db.learnts),
        reference=reference,
        deleted_measures=deleted_measures,
    )


def _count_protected(clauses: Iterable[LearnedClause]) -> int:
    return sum(1 for clause in clauses if clause.protected)
