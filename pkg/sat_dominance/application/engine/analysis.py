from collections.abc import Iterable

from sat_dominance.application.metrics import bump_clause_activity
from sat_dominance.domain.clauses import Clause, ClauseDatabase, LearnedClause
from sat_dominance.domain.formula import Literal

from .heuristics import VarOrder
from .trail import Trail


def compute_lbd(literals: Iterable[Literal], trail: Trail) -> int:
    """Number of distinct decision levels among the (assigned) literals."""

    return len({trail.levels[abs(literal)] for literal in literals})


def _touch_antecedent(clause: Clause, trail: Trail, db: ClauseDatabase) -> None:
    if isinstance(clause, LearnedClause):
        bump_clause_activity(clause, db)
        clause.update_lbd(compute_lbd(clause.literals, trail))


def analyze_conflict(
    conflict: Clause, trail: Trail, var_order: VarOrder, db: ClauseDatabase
) -> tuple[list[Literal], int, int]:
    """
    First-UIP conflict analysis.

    Returns the learned literals with the asserting literal first and, when the clause is not unit, the literal of
    the backjump level second; the backjump level; and the LBD of the learned clause. Variables seen during the
    analysis are bumped, and every learned clause met as conflict or antecedent has its activity bumped and its LBD
    lowered if the current assignment gives a smaller one.
    """

    current_level = trail.decision_level
    levels = trail.levels
    seen: set[int] = set()
    learned: list[Literal] = [0]
    pending = 0
    index = len(trail.literals) - 1
    clause: Clause | None = conflict
    resolved: Literal = 0

    while True:
        _touch_antecedent(clause, trail, db)

        for literal in clause.literals:
            var = abs(literal)
            if literal == resolved or var in seen or levels[var] == 0:
                continue

            seen.add(var)
            var_order.bump(var)
            if levels[var] >= current_level:
                pending += 1
            else:
                learned.append(literal)

        while abs(trail.literals[index]) not in seen:
            index -= 1
        resolved = trail.literals[index]
        index -= 1
        seen.discard(abs(resolved))
        pending -= 1
        if pending <= 0:
            break

        clause = trail.reasons[abs(resolved)]

    learned[0] = -resolved

    if len(learned) == 1:
        backjump_level = 0
    else:
        highest = max(range(1, len(learned)), key=lambda i: levels[abs(learned[i])])
        learned[1], learned[highest] = learned[highest], learned[1]
        backjump_level = levels[abs(learned[1])]

    lbd = compute_lbd(learned, trail)

    return learned, backjump_level, lbd
