import random
import time

from loguru import logger

from sat_dominance.application.metrics import bump_clause_activity, decay_clause_activity
from sat_dominance.application.reduction import ReductionDispatcher, should_reduce
from sat_dominance.domain.clauses import Clause, ClauseDatabase, LearnedClause
from sat_dominance.domain.config import SolverConfig
from sat_dominance.domain.exceptions import InvariantViolation
from sat_dominance.domain.formula import CnfFormula, Literal
from sat_dominance.domain.outcome import SearchStats, SolveOutcome
from sat_dominance.domain.strategy import ReductionReport
from sat_dominance.domain.types import SolveStatus, StrategyKind

from .analysis import analyze_conflict
from .heuristics import RestartPolicy, VarOrder, decide
from .trail import FALSE, TRUE, Trail


class Solver:
    """
    CDCL solver with two watched literals, first-UIP learning, VSIDS decisions with phase saving, Luby restarts and
    a pluggable learned-clause database reduction strategy.

    A solver instance is single-threaded and solves one formula.
    """

    def __init__(self, formula: CnfFormula, config: SolverConfig | None = None) -> None:
        self.formula = formula
        self.config = config or SolverConfig()
        self.num_vars = formula.num_vars

        self.trail = Trail(self.num_vars)
        self.var_order = VarOrder(self.trail, self.config.var_decay)
        self.db = ClauseDatabase(clause_decay=self.config.clause_decay)
        self.watches: dict[Literal, list[Clause]] = {}
        for var in range(1, self.num_vars + 1):
            self.watches[var] = []
            self.watches[-var] = []

        self.restarts = RestartPolicy(self.config.luby_unit)
        self.reducer = ReductionDispatcher(self.config.strategy)
        self.stats = SearchStats()
        self.reports: list[ReductionReport] = []
        self.learned_trace: list[list[Literal]] = []
        self._conflicts_since_reduction = 0
        self._rng = random.Random(self.config.seed)

        self._ok = self._load()

    def _load(self) -> bool:
        for literals in self.formula.clauses:
            if not literals:
                return False

            if len(literals) == 1:
                literal = literals[0]
                value = self.trail.value(literal)
                if value == FALSE:
                    return False
                if value != TRUE:
                    self.trail.assign(literal, None)
                continue

            clause = Clause(list(literals))
            self.db.original.append(clause)
            self._attach(clause)

        return self.propagate() is None

    def _attach(self, clause: Clause) -> None:
        self.watches[clause.literals[0]].append(clause)
        self.watches[clause.literals[1]].append(clause)

    def propagate(self) -> Clause | None:
        """Runs unit propagation to fixpoint. Returns the first conflicting clause, if any."""

        trail = self.trail
        conflict = None

        while trail.qhead < len(trail.literals):
            p = trail.literals[trail.qhead]
            trail.qhead += 1
            self.stats.propagations += 1

            false_literal = -p
            watchers = self.watches[false_literal]
            kept: list[Clause] = []
            position = 0
            count = len(watchers)
            while position < count:
                clause = watchers[position]
                position += 1
                if clause.removed:
                    continue

                literals = clause.literals
                if literals[0] == false_literal:
                    literals[0], literals[1] = literals[1], literals[0]

                first = literals[0]
                if trail.value(first) == TRUE:
                    kept.append(clause)
                    continue

                for k in range(2, len(literals)):
                    if trail.value(literals[k]) != FALSE:
                        literals[1], literals[k] = literals[k], literals[1]
                        self.watches[literals[1]].append(clause)
                        break
                else:
                    kept.append(clause)
                    if trail.value(first) == FALSE:
                        conflict = clause
                        kept.extend(watchers[position:])
                        trail.qhead = len(trail.literals)
                        break

                    trail.assign(first, clause)

            self.watches[false_literal] = kept
            if conflict is not None:
                break

        if self.config.check_invariants:
            trail.check_invariants()

        return conflict

    def analyze(self, conflict: Clause) -> tuple[list[Literal], int, int]:
        return analyze_conflict(conflict, self.trail, self.var_order, self.db)

    def backjump(self, level: int) -> None:
        for var in self.trail.backjump(level):
            self.var_order.insert(var)

        if self.config.check_invariants:
            self.trail.check_invariants()

    def decide(self) -> Literal | None:
        return decide(self.var_order, self.trail, self._rng, self.config.random_var_freq)

    def learn(self, literals: list[Literal], backjump_level: int, lbd: int) -> LearnedClause | None:
        """Backjumps and asserts the learned clause; unit clauses become level-0 facts and are not stored."""

        self.stats.learned += 1
        if self.config.trace_learned:
            self.learned_trace.append(list(literals))

        self.backjump(backjump_level)
        if len(literals) == 1:
            self.trail.assign(literals[0], None)

            return None

        clause = LearnedClause(list(literals), lbd=lbd)
        self.db.add_learnt(clause)
        self._attach(clause)
        bump_clause_activity(clause, self.db)
        self.trail.assign(literals[0], clause)

        return clause

    def restart_if_due(self) -> bool:
        if not self.restarts.due():
            return False

        self.backjump(0)
        self.restarts.advance()
        self.stats.restarts += 1

        return True

    def locked_clauses(self) -> set[LearnedClause]:
        reasons = self.trail.reasons

        return {
            reason for literal in self.trail.literals if isinstance(reason := reasons[abs(literal)], LearnedClause)
        }

    def reduce_if_due(self) -> ReductionReport | None:
        if self.config.strategy.kind == StrategyKind.NONE:
            return None
        if not should_reduce(self._conflicts_since_reduction, self.stats.reductions, self.config):
            return None

        locked = self.locked_clauses()
        report = self.reducer.dispatch(self.db, locked, self.num_vars)

        self._conflicts_since_reduction = 0
        self.stats.reductions += 1
        self.stats.deleted += report.deleted
        self.stats.deleted_fractions.append(report.deleted_fraction)
        if report.reference is not None:
            self.stats.reference_selections += 1
        self.reports.append(report)

        if self.config.check_invariants:
            self._check_report(report, locked)

        return report

    def _check_report(self, report: ReductionReport, locked: set[LearnedClause]) -> None:
        if report.before != report.deleted + self.db.num_learnts:
            raise InvariantViolation("Reduction report counts disagree with the database.")
        for measures in report.deleted_measures:
            if measures.size <= 2 or measures.lbd <= 2:
                raise InvariantViolation(f"A protected clause was deleted: {measures}.")
        if any(clause.removed for clause in locked):
            raise InvariantViolation("A reason-locked clause was deleted.")
        if self.config.strategy.kind == StrategyKind.SORT_HALF and report.deleted > report.before // 2:
            raise InvariantViolation(f"Sort-half reduction deleted {report.deleted} of {report.before} clauses.")

    def _budget_exhausted(self, started: float) -> bool:
        if self.config.conflict_budget is not None and self.stats.conflicts >= self.config.conflict_budget:
            return True
        if self.config.time_budget is not None and self.stats.conflicts % self.config.timeout_check_interval == 0:
            return time.perf_counter() - started >= self.config.time_budget

        return False

    def _outcome(self, status: SolveStatus, model: list[Literal] | None = None) -> SolveOutcome:
        return SolveOutcome(status=status, model=model, stats=self.stats, learned_trace=self.learned_trace)

    def solve(self) -> SolveOutcome:
        if not self._ok:
            return self._outcome(SolveStatus.UNSAT)

        started = time.perf_counter()
        trail = self.trail
        while True:
            conflict = self.propagate()
            if conflict is not None:
                self.stats.conflicts += 1
                self.restarts.on_conflict()
                self._conflicts_since_reduction += 1
                if trail.decision_level == 0:
                    return self._outcome(SolveStatus.UNSAT)

                literals, backjump_level, lbd = self.analyze(conflict)
                self.learn(literals, backjump_level, lbd)
                self.var_order.decay()
                decay_clause_activity(self.db)

                if self._budget_exhausted(started):
                    logger.debug(f"Search budget exhausted after {self.stats.conflicts} conflicts.")

                    return self._outcome(SolveStatus.UNKNOWN)
                continue

            if self.restart_if_due():
                continue
            self.reduce_if_due()

            literal = self.decide()
            if literal is None:
                model = trail.model()
                if not self.formula.is_satisfied_by(model):
                    raise InvariantViolation("The model does not satisfy the formula.")

                return self._outcome(SolveStatus.SAT, model)

            trail.new_decision_level()
            trail.assign(literal, None)
            self.stats.decisions += 1


def solve(formula: CnfFormula, config: SolverConfig | None = None) -> SolveOutcome:
    return Solver(formula, config).solve()
