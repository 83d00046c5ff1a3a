from collections.abc import Sequence, Set
from typing import TypeVar

from sat_dominance.application.metrics import deg_comp_exact, dominates_strict, prefer
from sat_dominance.domain.clauses import ClauseDatabase, LearnedClause
from sat_dominance.domain.measures import HasMeasures, MeasureSet, MeasureVector
from sat_dominance.domain.strategy import ReductionReport
from sat_dominance.domain.types import Preference

from .base import ReductionHandler, apply_deletion, deletable

ClauseT = TypeVar("ClauseT", bound=HasMeasures)


def is_eligible(item: HasMeasures) -> bool:
    return item.size > 2 and item.lbd > 2


def min_deg_comp(clauses: Sequence[ClauseT], measures: MeasureSet, num_vars: int) -> ClauseT | None:
    """
    Reference clause: the eligible clause of minimal degree of compromise.

    Scores are exact. Among tied clauses the earliest one that no other tied clause strictly dominates is chosen, so
    the reference is undominated within the eligible clauses.
    """

    eligible = [clause for clause in clauses if is_eligible(clause)]
    if not eligible:
        return None

    scores = [deg_comp_exact(clause, num_vars, measures) for clause in eligible]
    best_score = min(scores)
    tied = [clause for clause, score in zip(eligible, scores, strict=True) if score == best_score]

    return next(
        candidate
        for candidate in tied
        if not any(other is not candidate and dominates_strict(other, candidate, measures) for other in tied)
    )


def alg2_dominates(c_min: HasMeasures, clause: HasMeasures, measures: MeasureSet) -> bool:
    """True only when the reference is strictly preferred to the clause on every measure; any tie rejects."""

    for m in measures:
        if prefer(m, m.value_of(clause), m.value_of(c_min)) != Preference.B_PREFERRED:
            return False

    return True


def reduce_dominance(
    db: ClauseDatabase, measures: MeasureSet, num_vars: int, locked: Set[LearnedClause] = frozenset()
) -> ReductionReport:
    before = db.num_learnts
    c_min = min_deg_comp(db.learnts, measures, num_vars)
    if c_min is None:
        return apply_deletion(db, [], before)

    doomed = [
        clause
        for clause in db.learnts
        if clause is not c_min and deletable(clause, locked) and alg2_dominates(c_min, clause, measures)
    ]

    return apply_deletion(db, doomed, before, reference=MeasureVector.of(c_min))


class DominanceReductionHandler(ReductionHandler):
    def __init__(self, measures: MeasureSet) -> None:
        self._measures = measures

    def reduce(self, db: ClauseDatabase, locked: Set[LearnedClause], num_vars: int) -> ReductionReport:
        return reduce_dominance(db, self._measures, num_vars, locked)
