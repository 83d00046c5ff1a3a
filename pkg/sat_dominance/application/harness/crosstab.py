from collections import Counter
from collections.abc import Iterable, Mapping, Sequence

from sat_dominance.domain.exceptions import ImproperlyConfigured
from sat_dominance.domain.outcome import InstanceStats

Runs = Mapping[str, Sequence[InstanceStats]]


def solved_sets(runs: Runs) -> dict[str, set[str]]:
    return {strategy: {row.instance for row in rows if row.status.solved} for strategy, rows in runs.items()}


def common_solved(runs: Runs) -> dict[str, dict[str, int]]:
    """Pairwise counts of instances solved by both strategies; the diagonal holds each strategy's solved count."""

    solved = solved_sets(runs)

    return {a: {b: len(solved[a] & solved[b]) for b in solved} for a in solved}


def solved_patterns(runs: Runs) -> dict[tuple[str, ...], int]:
    """
    Counts instances per membership pattern: the key lists, in run order, the strategies that solved the instance.

    Instances that appear in some run but were solved by none are counted under the empty pattern.
    """

    solved = solved_sets(runs)
    instances: dict[str, None] = {}
    for rows in runs.values():
        instances.update(dict.fromkeys(row.instance for row in rows))

    patterns = Counter(
        tuple(strategy for strategy, names in solved.items() if instance in names) for instance in instances
    )

    return dict(sorted(patterns.items(), key=lambda item: (-len(item[0]), item[0])))


def coverage_violations(runs: Runs, reference: Iterable[str], candidate: str) -> list[str]:
    """Instances solved by every reference strategy but not by the candidate, sorted by name."""

    solved = solved_sets(runs)
    reference = list(reference)
    missing = [strategy for strategy in [*reference, candidate] if strategy not in solved]
    if missing:
        raise ImproperlyConfigured(f"No run for strategies: {', '.join(missing)}.")
    if not reference:
        return []

    jointly = set.intersection(*(solved[strategy] for strategy in reference))

    return sorted(jointly - solved[candidate])
