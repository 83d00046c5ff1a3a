from collections.abc import Iterable

import numpy as np
from numpy.typing import NDArray

from sat_dominance.domain.config import OracleLimit
from sat_dominance.domain.exceptions import InvariantViolation, OracleLimitExceeded
from sat_dominance.domain.formula import CnfFormula, Literal
from sat_dominance.domain.outcome import SolveOutcome
from sat_dominance.domain.types import SolveStatus
from sat_dominance.settings import settings


def _clause_arrays(formula: CnfFormula) -> list[tuple[NDArray[np.int64], NDArray[np.bool_]]]:
    return [
        (
            np.array([abs(literal) - 1 for literal in clause], dtype=np.int64),
            np.array([literal > 0 for literal in clause], dtype=np.bool_),
        )
        for clause in formula.clauses
    ]


def brute_force_sat(formula: CnfFormula, limit: OracleLimit | None = None) -> SolveOutcome:
    """
    Decides the formula by enumerating its truth table in chunks of assignments.

    Raises:
        OracleLimitExceeded: If the formula has more variables than the limit allows.
    """

    limit = limit or OracleLimit()
    num_vars = formula.num_vars
    if num_vars > limit.max_vars:
        raise OracleLimitExceeded(f"Exhaustive enumeration is limited to {limit.max_vars} variables, got {num_vars}.")
    if formula.has_empty_clause:
        return SolveOutcome(status=SolveStatus.UNSAT)

    clauses = _clause_arrays(formula)
    chunk = 1 << min(num_vars, settings.ORACLE_CHUNK_BITS)
    shifts = np.arange(num_vars, dtype=np.int64)

    for start in range(0, 1 << num_vars, chunk):
        indices = np.arange(start, start + chunk, dtype=np.int64)
        bits = ((indices[:, None] >> shifts) & 1).astype(np.bool_)

        satisfied = np.ones(chunk, dtype=np.bool_)
        for variables, polarities in clauses:
            satisfied &= (bits[:, variables] == polarities).any(axis=1)
            if not satisfied.any():
                break

        hits = np.flatnonzero(satisfied)
        if hits.size > 0:
            assignment = bits[hits[0]]
            model = [var + 1 if assignment[var] else -(var + 1) for var in range(num_vars)]
            if not formula.is_satisfied_by(model):
                raise InvariantViolation("The oracle produced a model that does not satisfy the formula.")

            return SolveOutcome(status=SolveStatus.SAT, model=model)

    return SolveOutcome(status=SolveStatus.UNSAT)


def is_entailed(formula: CnfFormula, literals: Iterable[Literal], limit: OracleLimit | None = None) -> bool:
    """True iff every model of the formula satisfies the clause, i.e. formula ∧ ¬clause is unsatisfiable."""

    refutation = formula.with_units(-literal for literal in literals)

    return brute_force_sat(refutation, limit).status == SolveStatus.UNSAT
