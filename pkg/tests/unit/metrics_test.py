import math

import pytest

from sat_dominance.application.metrics import (
    bump_clause_activity,
    decay_clause_activity,
    deg_comp,
    deg_comp_exact,
    dominates_strict,
    dominates_weak,
    normalize,
    normalize_value,
    prefer,
)
from sat_dominance.domain.clauses import ClauseDatabase
from sat_dominance.domain.exceptions import ImproperlyConfigured
from sat_dominance.domain.measures import MeasureSet, MeasureVector
from sat_dominance.domain.types import MeasureId, Preference
from sat_dominance.settings import settings


def test_prefer_follows_measure_direction() -> None:
    assert prefer(MeasureId.LBD, 3, 5) == Preference.A_PREFERRED
    assert prefer(MeasureId.CVSIDS, 1e300, 1e200) == Preference.A_PREFERRED
    assert prefer(MeasureId.SIZE, 6, 6) == Preference.TIE
    assert prefer(MeasureId.SIZE, 7, 6) == Preference.B_PREFERRED
    assert prefer(MeasureId.CVSIDS, 1.0, 2.0) == Preference.B_PREFERRED


def test_dominance_on_motivating_clauses(motivating_vectors: list[MeasureVector]) -> None:
    c1, c2, c3 = motivating_vectors
    measures = MeasureSet.default()

    assert dominates_weak(c3, c2, measures)
    assert dominates_strict(c3, c2, measures)
    assert not dominates_weak(c1, c3, measures)
    assert not dominates_weak(c3, c1, measures)


def test_dominance_is_reflexive_but_not_strict(motivating_vectors: list[MeasureVector]) -> None:
    measures = MeasureSet.default()

    for vector in motivating_vectors:
        assert dominates_weak(vector, vector, measures)
        assert not dominates_strict(vector, vector, measures)


def test_dominance_respects_measure_subset(motivating_vectors: list[MeasureVector]) -> None:
    c1, _, c3 = motivating_vectors

    assert dominates_strict(c1, c3, MeasureSet.parse("lbd"))
    assert dominates_strict(c3, c1, MeasureSet.parse("size,cvsids"))


def test_strict_dominance_with_one_tie() -> None:
    u = MeasureVector(size=5, lbd=4, activity=2.0)
    v = MeasureVector(size=5, lbd=6, activity=2.0)

    assert dominates_strict(u, v, MeasureSet.default())
    assert not dominates_strict(v, u, MeasureSet.default())


def test_normalize_motivating_clause(motivating_vectors: list[MeasureVector]) -> None:
    normalized = normalize(motivating_vectors[0], 100)

    assert normalized[MeasureId.SIZE] == pytest.approx(0.08)
    assert normalized[MeasureId.LBD] == pytest.approx(0.03)
    assert normalized[MeasureId.CVSIDS] == pytest.approx(1e-100, rel=1e-12)


def test_normalize_unbumped_and_small_activities() -> None:
    assert normalize_value(MeasureId.CVSIDS, MeasureVector(size=3, lbd=3, activity=0.0), 10) == 1.0
    assert normalize_value(MeasureId.CVSIDS, MeasureVector(size=3, lbd=3, activity=0.25), 10) == 1.0
    assert normalize_value(MeasureId.CVSIDS, MeasureVector(size=3, lbd=3, activity=4.0), 10) == 0.25


def test_normalize_rejects_zero_variables() -> None:
    vector = MeasureVector(size=1, lbd=1, activity=1.0)

    with pytest.raises(ImproperlyConfigured):
        normalize_value(MeasureId.SIZE, vector, 0)
    with pytest.raises(ImproperlyConfigured):
        deg_comp_exact(vector, 0)


@pytest.mark.parametrize("num_vars", [50, 100, 1000])
def test_deg_comp_worked_formula(motivating_vectors: list[MeasureVector], num_vars: int) -> None:
    expected = (1 / 1e100 + 3 / num_vars + 8 / num_vars) / 3

    assert math.isclose(deg_comp(motivating_vectors[0], num_vars), expected, rel_tol=1e-12)


def test_deg_comp_values(motivating_vectors: list[MeasureVector]) -> None:
    c1, c2, c3 = motivating_vectors

    assert deg_comp(c1, 100) == pytest.approx(0.0366667, abs=1e-7)
    assert deg_comp(c3, 100) == pytest.approx(0.03)
    assert deg_comp(c3, 100) < deg_comp(c2, 100)


def test_deg_comp_exact_separates_huge_activities() -> None:
    weaker = MeasureVector(size=5, lbd=4, activity=1e20)
    stronger = MeasureVector(size=5, lbd=4, activity=1e21)

    assert deg_comp(weaker, 100) == deg_comp(stronger, 100)
    assert deg_comp_exact(stronger, 100) < deg_comp_exact(weaker, 100)
    assert math.isclose(float(deg_comp_exact(stronger, 100)), deg_comp(stronger, 100), rel_tol=1e-12)


def test_deg_comp_exact_clamps_low_activity() -> None:
    zero = MeasureVector(size=5, lbd=4, activity=0.0)
    fractional = MeasureVector(size=5, lbd=4, activity=0.25)

    assert deg_comp_exact(zero, 10) == deg_comp_exact(fractional, 10)


def test_deg_comp_single_measure_upper_bound() -> None:
    vector = MeasureVector(size=20, lbd=3, activity=1.0)

    assert deg_comp(vector, 20, MeasureSet.parse("size")) == 1.0


def test_bump_fresh_clause(clause_factory) -> None:
    clause = clause_factory(4, 3)
    db = ClauseDatabase(clause_decay=0.999, learnts=[clause])

    bump_clause_activity(clause, db)

    assert clause.activity == 1.0


def test_bumps_accumulate_decayed_increments(clause_factory) -> None:
    clause = clause_factory(4, 3)
    db = ClauseDatabase(clause_decay=0.999, learnts=[clause])

    expected = 0.0
    increment = 1.0
    for _ in range(50):
        bump_clause_activity(clause, db)
        expected += increment
        decay_clause_activity(db)
        increment *= 1 / 0.999

    assert clause.activity == pytest.approx(expected, rel=1e-12)
    assert db.clause_inc == pytest.approx(increment, rel=1e-12)


def test_rescale_preserves_activity_order(clause_factory) -> None:
    low = clause_factory(4, 3, activity=1.0)
    high = clause_factory(4, 3, activity=settings.ACTIVITY_RESCALE_LIMIT / 2)
    db = ClauseDatabase(clause_decay=0.999, learnts=[low, high], clause_inc=settings.ACTIVITY_RESCALE_LIMIT)

    bump_clause_activity(high, db)

    assert high.activity <= settings.ACTIVITY_RESCALE_LIMIT
    assert db.clause_inc == pytest.approx(1.0)
    assert low.activity < high.activity
    assert low.activity == pytest.approx(1 / settings.ACTIVITY_RESCALE_LIMIT)
