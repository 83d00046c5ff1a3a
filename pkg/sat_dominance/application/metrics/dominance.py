from sat_dominance.domain.measures import HasMeasures, MeasureSet
from sat_dominance.domain.types import Direction, MeasureId, Preference


def prefer(measure: MeasureId, a: float, b: float) -> Preference:
    """Compares two raw values of one measure according to its preference direction."""

    if a == b:
        return Preference.TIE

    a_smaller = a < b
    if measure.direction == Direction.SMALLER_PREFERRED:
        return Preference.A_PREFERRED if a_smaller else Preference.B_PREFERRED

    return Preference.B_PREFERRED if a_smaller else Preference.A_PREFERRED


def dominates_weak(u: HasMeasures, v: HasMeasures, measures: MeasureSet) -> bool:
    """True iff u is at least as preferred as v on every measure of M."""

    return all(prefer(m, m.value_of(u), m.value_of(v)) != Preference.B_PREFERRED for m in measures)


def dominates_strict(u: HasMeasures, v: HasMeasures, measures: MeasureSet) -> bool:
    """Weak dominance plus a strict preference on at least one measure of M."""

    strictly_better = False
    for m in measures:
        preference = prefer(m, m.value_of(u), m.value_of(v))
        if preference == Preference.B_PREFERRED:
            return False
        if preference == Preference.A_PREFERRED:
            strictly_better = True

    return strictly_better
