from sat_dominance.domain.clauses import ClauseDatabase, LearnedClause
from sat_dominance.settings import settings


def bump_clause_activity(clause: LearnedClause, db: ClauseDatabase) -> None:
    """Adds the current increment to the clause activity. The clause must belong to the database."""

    clause.activity += db.clause_inc
    if clause.activity > settings.ACTIVITY_RESCALE_LIMIT:
        rescale = 1.0 / settings.ACTIVITY_RESCALE_LIMIT
        for learnt in db.learnts:
            learnt.activity *= rescale
        db.clause_inc *= rescale


def decay_clause_activity(db: ClauseDatabase) -> None:
    db.clause_inc *= 1.0 / db.clause_decay
