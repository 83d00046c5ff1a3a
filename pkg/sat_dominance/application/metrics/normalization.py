import math
from fractions import Fraction

from sat_dominance.domain.exceptions import ImproperlyConfigured
from sat_dominance.domain.measures import HasMeasures, MeasureSet, NormalizedVector
from sat_dominance.domain.types import MeasureId


def _check_num_vars(num_vars: int) -> None:
    if num_vars <= 0:
        raise ImproperlyConfigured(f"Normalization needs a positive number of variables, got {num_vars}.")


def normalize_value(measure: MeasureId, item: HasMeasures, num_vars: int) -> float:
    _check_num_vars(num_vars)

    if measure == MeasureId.CVSIDS:
        # Unbumped clauses are the most deletable; activities below 1 are clamped.
        activity = item.activity
        if activity <= 0.0:
            return 1.0

        return min(1.0, 1.0 / activity)

    return measure.value_of(item) / num_vars


def normalize(item: HasMeasures, num_vars: int, measures: MeasureSet | None = None) -> NormalizedVector:
    measures = measures or MeasureSet.default()

    return NormalizedVector(components={m: normalize_value(m, item, num_vars) for m in measures})


def deg_comp(item: HasMeasures, num_vars: int, measures: MeasureSet | None = None) -> float:
    """Degree of compromise: the mean of the normalized measure values over M."""

    measures = measures or MeasureSet.default()

    return math.fsum(normalize_value(m, item, num_vars) for m in measures) / len(measures)


def _exact_value(measure: MeasureId, item: HasMeasures, num_vars: int) -> Fraction:
    if measure == MeasureId.CVSIDS:
        activity = Fraction(item.activity)
        if activity <= 0:
            return Fraction(1)

        return min(Fraction(1), 1 / activity)

    return Fraction(measure.value_of(item)) / num_vars


def deg_comp_exact(item: HasMeasures, num_vars: int, measures: MeasureSet | None = None) -> Fraction:
    """Degree of compromise in exact rational arithmetic. The float mean loses the CVSIDS term above ~1e17."""

    _check_num_vars(num_vars)
    measures = measures or MeasureSet.default()

    return sum((_exact_value(m, item, num_vars) for m in measures), Fraction(0)) / len(measures)
