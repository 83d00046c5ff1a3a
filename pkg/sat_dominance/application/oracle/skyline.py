from collections.abc import Sequence

from sat_dominance.application.metrics import deg_comp_exact
from sat_dominance.domain.config import OracleLimit
from sat_dominance.domain.exceptions import OracleLimitExceeded
from sat_dominance.domain.measures import HasMeasures, MeasureSet
from sat_dominance.domain.types import Direction, MeasureId


def _better(measure: MeasureId, a: float, b: float) -> bool:
    if measure.direction == Direction.SMALLER_PREFERRED:
        return a < b

    return a > b


def _strictly_dominates(u: HasMeasures, v: HasMeasures, measures: MeasureSet) -> bool:
    raw_u = [m.value_of(u) for m in measures]
    raw_v = [m.value_of(v) for m in measures]
    no_worse = all(not _better(m, b, a) for m, a, b in zip(measures, raw_u, raw_v, strict=True))

    return no_worse and raw_u != raw_v


def _check_size(vectors: Sequence[HasMeasures], limit: OracleLimit | None) -> None:
    limit = limit or OracleLimit()
    if len(vectors) > limit.max_database:
        raise OracleLimitExceeded(f"Pairwise scans are limited to {limit.max_database} vectors, got {len(vectors)}.")


def brute_force_undominated(
    vectors: Sequence[HasMeasures], measures: MeasureSet, limit: OracleLimit | None = None
) -> set[int]:
    """Skyline: indices of the vectors no other vector strictly dominates, found by comparing every pair."""

    _check_size(vectors, limit)

    return {
        i
        for i, candidate in enumerate(vectors)
        if not any(j != i and _strictly_dominates(other, candidate, measures) for j, other in enumerate(vectors))
    }


def dominated_by_reference(
    vectors: Sequence[HasMeasures], measures: MeasureSet, num_vars: int, limit: OracleLimit | None = None
) -> set[int]:
    """Indices a dominance reduction must delete: eligible vectors strictly worse than the reference everywhere."""

    _check_size(vectors, limit)

    eligible = [i for i, vector in enumerate(vectors) if vector.size > 2 and vector.lbd > 2]
    if not eligible:
        return set()

    scores = {i: deg_comp_exact(vectors[i], num_vars, measures) for i in eligible}
    best = min(scores.values())
    tied = [i for i in eligible if scores[i] == best]
    reference = min(i for i in tied if not any(_strictly_dominates(vectors[j], vectors[i], measures) for j in tied))

    return {
        i
        for i in eligible
        if i != reference
        and all(_better(m, m.value_of(vectors[reference]), m.value_of(vectors[i])) for m in measures)
    }
