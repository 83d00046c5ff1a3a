import pytest

from sat_dominance.application.oracle import (
    brute_force_sat,
    brute_force_undominated,
    dominated_by_reference,
    is_entailed,
)
from sat_dominance.domain.config import OracleLimit
from sat_dominance.domain.exceptions import OracleLimitExceeded
from sat_dominance.domain.formula import CnfFormula
from sat_dominance.domain.measures import MeasureSet, MeasureVector
from sat_dominance.domain.types import SolveStatus


def test_contradictory_units_are_unsat() -> None:
    assert brute_force_sat(CnfFormula(num_vars=1, clauses=[[1], [-1]])).status == SolveStatus.UNSAT


def test_model_is_found_and_verified() -> None:
    outcome = brute_force_sat(CnfFormula(num_vars=2, clauses=[[1, 2], [-1, 2]]))

    assert outcome.status == SolveStatus.SAT
    assert 2 in outcome.model


def test_enumeration_spans_several_chunks() -> None:
    # Only the all-true assignment, the very last one enumerated, satisfies the formula.
    formula = CnfFormula(num_vars=18, clauses=[[var] for var in range(1, 19)])

    outcome = brute_force_sat(formula)

    assert outcome.status == SolveStatus.SAT
    assert outcome.model == list(range(1, 19))


def test_formula_without_variables() -> None:
    assert brute_force_sat(CnfFormula(num_vars=0)).status == SolveStatus.SAT
    assert brute_force_sat(CnfFormula(num_vars=0, clauses=[[]])).status == SolveStatus.UNSAT


def test_variable_limit_is_enforced() -> None:
    with pytest.raises(OracleLimitExceeded):
        brute_force_sat(CnfFormula(num_vars=5), OracleLimit(max_vars=4))


def test_entailment() -> None:
    formula = CnfFormula(num_vars=3, clauses=[[-1, 2], [-2, 3]])

    assert is_entailed(formula, [-1, 3])
    assert is_entailed(formula, [-1, 2, 3])
    assert not is_entailed(formula, [1, 3])


def test_skyline_of_motivating_clauses(motivating_vectors: list[MeasureVector]) -> None:
    assert brute_force_undominated(motivating_vectors, MeasureSet.default()) == {0, 2}


def test_skyline_of_singleton() -> None:
    assert brute_force_undominated([MeasureVector(size=3, lbd=3, activity=0.0)], MeasureSet.default()) == {0}


def test_skyline_keeps_duplicates() -> None:
    vector = MeasureVector(size=4, lbd=3, activity=2.0)

    assert brute_force_undominated([vector, vector], MeasureSet.default()) == {0, 1}


def test_skyline_is_order_independent(motivating_vectors: list[MeasureVector]) -> None:
    reversed_vectors = motivating_vectors[::-1]

    assert brute_force_undominated(reversed_vectors, MeasureSet.default()) == {0, 2}


def test_skyline_size_limit() -> None:
    vectors = [MeasureVector(size=3, lbd=3, activity=float(i)) for i in range(5)]

    with pytest.raises(OracleLimitExceeded):
        brute_force_undominated(vectors, MeasureSet.default(), OracleLimit(max_database=4))


def test_dominated_by_reference_on_motivating_clauses(motivating_vectors: list[MeasureVector]) -> None:
    assert dominated_by_reference(motivating_vectors, MeasureSet.default(), 100) == {1}


def test_dominated_by_reference_ignores_protected_vectors() -> None:
    vectors = [
        MeasureVector(size=3, lbd=3, activity=10.0),
        MeasureVector(size=9, lbd=2, activity=1.0),
        MeasureVector(size=9, lbd=8, activity=1.0),
    ]

    assert dominated_by_reference(vectors, MeasureSet.default(), 20) == {2}


def test_dominated_by_reference_separates_activities_beyond_float_precision() -> None:
    vectors = [
        MeasureVector(size=5, lbd=4, activity=1e20),
        MeasureVector(size=5, lbd=4, activity=1e21),
        MeasureVector(size=6, lbd=5, activity=1e20),
    ]

    assert dominated_by_reference(vectors, MeasureSet.default(), 100) == {2}
    assert 1 in brute_force_undominated(vectors, MeasureSet.default())
