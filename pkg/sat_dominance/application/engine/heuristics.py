import heapq
import random

from sat_dominance.domain.formula import Literal
from sat_dominance.settings import settings

from .trail import UNASSIGNED, Trail

# Stale entries are compacted once the heap holds this many entries per variable.
HEAP_SLACK = 2


def luby(y: float, x: int) -> float:
    """x-th element (0-based) of the Luby sequence with base y."""

    size = 1
    seq = 0
    while size < x + 1:
        seq += 1
        size = 2 * size + 1
    while size - 1 != x:
        size = (size - 1) >> 1
        seq -= 1
        x = x % size

    return y**seq


class VarOrder:
    """
    VSIDS variable order: a lazy max-heap over activities.

    Entries are (-activity, var), so equal activities fall back to the lowest variable index. Stale entries (the
    variable is assigned, or its activity changed since the push) are skipped on pop.
    """

    def __init__(self, trail: Trail, var_decay: float) -> None:
        self._trail = trail
        self.var_decay = var_decay
        self.var_inc = 1.0
        self.activity: list[float] = [0.0] * (trail.num_vars + 1)
        self._heap: list[tuple[float, int]] = [(-0.0, var) for var in range(1, trail.num_vars + 1)]

    def bump(self, var: int) -> None:
        self.activity[var] += self.var_inc
        if self.activity[var] > settings.ACTIVITY_RESCALE_LIMIT:
            rescale = 1.0 / settings.ACTIVITY_RESCALE_LIMIT
            self.activity = [activity * rescale for activity in self.activity]
            self.var_inc *= rescale
            self._rebuild()
        elif self._trail.values[var] == UNASSIGNED:
            self._push(var)

    def decay(self) -> None:
        self.var_inc *= 1.0 / self.var_decay

    def insert(self, var: int) -> None:
        self._push(var)

    @property
    def heap_size(self) -> int:
        return len(self._heap)

    def pop_max(self) -> int | None:
        """Removes and returns the unassigned variable of maximal activity, or None when all are assigned."""

        values = self._trail.values
        while self._heap:
            neg_activity, var = heapq.heappop(self._heap)
            if values[var] == UNASSIGNED and -neg_activity == self.activity[var]:
                return var

        return None

    def _push(self, var: int) -> None:
        heapq.heappush(self._heap, (-self.activity[var], var))
        if len(self._heap) > HEAP_SLACK * max(1, self._trail.num_vars):
            self._rebuild()

    def _rebuild(self) -> None:
        values = self._trail.values
        self._heap = [
            (-self.activity[var], var) for var in range(1, self._trail.num_vars + 1) if values[var] == UNASSIGNED
        ]
        heapq.heapify(self._heap)


def decide(
    var_order: VarOrder, trail: Trail, rng: random.Random | None = None, random_var_freq: float = 0.0
) -> Literal | None:
    """Picks the next decision literal using the saved phase; None means every variable is assigned."""

    var: int | None = None
    if rng is not None and random_var_freq > 0.0 and trail.num_vars > 0 and rng.random() < random_var_freq:
        candidate = rng.randint(1, trail.num_vars)
        if trail.values[candidate] == UNASSIGNED:
            var = candidate

    if var is None:
        var = var_order.pop_max()
        if var is None:
            return None

    return var if trail.phases[var] else -var


class RestartPolicy:
    """Luby-scheduled restarts: run i lasts luby(2, i) * unit conflicts."""

    def __init__(self, unit: int) -> None:
        self.unit = unit
        self.index = 0
        self.conflicts = 0

    @property
    def budget(self) -> int:
        return int(luby(2, self.index) * self.unit)

    def on_conflict(self) -> None:
        self.conflicts += 1

    def due(self) -> bool:
        return self.conflicts >= self.budget

    def advance(self) -> None:
        self.index += 1
        self.conflicts = 0
