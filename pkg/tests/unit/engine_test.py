import itertools

import pytest

from sat_dominance.application.engine import RestartPolicy, Solver, Trail, compute_lbd, luby, solve
from sat_dominance.application.engine.trail import FALSE, TRUE, UNASSIGNED
from sat_dominance.domain.clauses import Clause, LearnedClause
from sat_dominance.domain.config import SolverConfig
from sat_dominance.domain.exceptions import InvariantViolation
from sat_dominance.domain.formula import CnfFormula
from sat_dominance.domain.strategy import ReductionStrategy
from sat_dominance.domain.types import SolveStatus


def _pigeonhole(pigeons: int, holes: int) -> CnfFormula:
    def var(pigeon: int, hole: int) -> int:
        return pigeon * holes + hole + 1

    clauses = [[var(p, h) for h in range(holes)] for p in range(pigeons)]
    for hole in range(holes):
        for p, q in itertools.combinations(range(pigeons), 2):
            clauses.append([-var(p, hole), -var(q, hole)])

    return CnfFormula(num_vars=pigeons * holes, clauses=clauses)


def test_luby_prefix() -> None:
    assert [luby(2, i) for i in range(15)] == [1, 1, 2, 1, 1, 2, 4, 1, 1, 2, 1, 1, 2, 4, 8]


def test_restart_policy_first_restart_after_unit() -> None:
    policy = RestartPolicy(100)

    for _ in range(99):
        policy.on_conflict()
    assert not policy.due()

    policy.on_conflict()
    assert policy.due()

    policy.advance()
    assert policy.budget == 100
    policy.advance()
    assert policy.budget == 200


def test_solve_contradictory_units() -> None:
    outcome = solve(CnfFormula(num_vars=1, clauses=[[1], [-1]]))

    assert outcome.status == SolveStatus.UNSAT
    assert outcome.model is None


def test_solve_single_binary_clause() -> None:
    formula = CnfFormula(num_vars=2, clauses=[[1, 2]])

    outcome = solve(formula)

    assert outcome.status == SolveStatus.SAT
    assert 1 in outcome.model or 2 in outcome.model
    assert formula.is_satisfied_by(outcome.model)


def test_solve_trivial_formulas() -> None:
    assert solve(CnfFormula(num_vars=0)).status == SolveStatus.SAT
    assert solve(CnfFormula(num_vars=3, clauses=[[1, 2], []])).status == SolveStatus.UNSAT


def test_solve_pigeonhole_is_unsat() -> None:
    for strategy in ("none", "size", "lbd", "cvsids", "degcomp"):
        config = SolverConfig(strategy=ReductionStrategy.from_name(strategy), reduce_base=2, reduce_inc=1)

        outcome = solve(_pigeonhole(5, 4), config)

        assert outcome.status == SolveStatus.UNSAT
        assert outcome.stats.conflicts > 0


def test_conflict_budget_yields_unknown() -> None:
    outcome = solve(_pigeonhole(5, 4), SolverConfig(conflict_budget=1))

    assert outcome.status == SolveStatus.UNKNOWN
    assert outcome.model is None
    assert outcome.stats.conflicts == 1


def test_propagate_binary_clause() -> None:
    solver = Solver(CnfFormula(num_vars=2, clauses=[[1, 2]]))
    solver.trail.new_decision_level()
    solver.trail.assign(-1, None)

    assert solver.propagate() is None
    assert solver.trail.value(2) == TRUE
    assert solver.trail.reason(2) is solver.db.original[0]


def test_units_are_propagated_at_level_zero() -> None:
    solver = Solver(CnfFormula(num_vars=3, clauses=[[1], [-1, 2], [-2, 3, 1]]))

    assert solver.trail.value(1) == TRUE
    assert solver.trail.value(2) == TRUE
    assert solver.trail.level(2) == 0
    assert solver.trail.value(3) == UNASSIGNED


def test_decide_breaks_ties_by_lowest_variable() -> None:
    solver = Solver(CnfFormula(num_vars=10, clauses=[[1, 2, 3]]))

    assert solver.decide() == -1


def test_decide_follows_bumped_variable() -> None:
    solver = Solver(CnfFormula(num_vars=10, clauses=[[1, 2, 3]]))

    solver.var_order.bump(7)

    assert solver.decide() == -7


def test_var_order_heap_stays_bounded() -> None:
    solver = Solver(CnfFormula(num_vars=10, clauses=[[1, 2, 3]]))
    order = solver.var_order

    for round_ in range(1_000):
        for var in range(1, 11):
            order.bump(var)
            assert order.heap_size <= 20, f"round {round_}"
        order.bump(4)
        order.decay()

    assert solver.decide() == -4


def test_decide_uses_saved_phase() -> None:
    solver = Solver(CnfFormula(num_vars=3, clauses=[[1, 2, 3]]))
    solver.trail.new_decision_level()
    solver.trail.assign(2, None)
    solver.backjump(0)
    solver.var_order.bump(2)

    assert solver.decide() == 2


def test_decide_returns_none_when_all_assigned() -> None:
    solver = Solver(CnfFormula(num_vars=2, clauses=[[1], [2]]))

    assert solver.decide() is None


def test_compute_lbd() -> None:
    trail = Trail(6)
    trail.assign(1, None)
    for literal in (2, 3, 4):
        trail.new_decision_level()
        trail.assign(literal, None)
    trail.assign(5, None)

    assert compute_lbd([-4, -5], trail) == 1
    assert compute_lbd([-2, -3, -4], trail) == 3
    assert compute_lbd([-1, -2, -5], trail) == 3


def test_analyze_decision_is_uip() -> None:
    solver = Solver(CnfFormula(num_vars=3, clauses=[[-1, 2], [-1, 3], [-2, -3]]))
    solver.trail.new_decision_level()
    solver.trail.assign(1, None)

    conflict = solver.propagate()
    assert conflict is not None

    learned, backjump_level, lbd = solver.analyze(conflict)
    assert learned == [-1]
    assert backjump_level == 0
    assert lbd == 1

    assert solver.learn(learned, backjump_level, lbd) is None
    assert solver.trail.decision_level == 0
    assert solver.trail.value(1) == FALSE
    assert solver.db.num_learnts == 0
    assert solver.stats.learned == 1


def test_learned_clause_is_asserting() -> None:
    solver = Solver(CnfFormula(num_vars=3, clauses=[[-1, -2, 3], [-1, -2, -3]]))
    for decision in (1, 2):
        solver.trail.new_decision_level()
        solver.trail.assign(decision, None)

    conflict = solver.propagate()
    assert conflict is not None

    learned, backjump_level, lbd = solver.analyze(conflict)
    assert learned[0] == -2
    assert sorted(learned) == [-2, -1]
    assert backjump_level == 1
    assert lbd == 2

    clause = solver.learn(learned, backjump_level, lbd)
    assert isinstance(clause, LearnedClause)
    assert clause.activity == 1.0
    assert solver.trail.decision_level == 1
    assert solver.trail.value(-2) == TRUE
    assert solver.trail.reason(-2) is clause
    assert solver.locked_clauses() == {clause}
    assert solver.propagate() is None


def test_backjump_keeps_lower_levels_and_saves_phases() -> None:
    trail = Trail(5)
    trail.assign(1, None)
    trail.new_decision_level()
    trail.assign(-2, None)
    trail.new_decision_level()
    trail.assign(3, None)
    trail.assign(-4, None)

    unassigned = trail.backjump(1)

    assert sorted(unassigned) == [3, 4]
    assert trail.literals == [1, -2]
    assert len(trail) == trail.count_at_or_below(1)
    assert trail.decision_level == 1
    assert trail.phases[3] is True
    assert trail.phases[4] is False
    assert trail.value(3) == UNASSIGNED

    trail.backjump(0)
    assert trail.literals == [1]
    assert trail.phases[2] is False


def test_restart_keeps_level_zero_assignments() -> None:
    solver = Solver(CnfFormula(num_vars=3, clauses=[[1], [2, 3]]))
    solver.trail.new_decision_level()
    solver.trail.assign(-2, None)
    solver.propagate()
    solver.restarts.conflicts = solver.restarts.budget

    assert solver.restart_if_due()
    assert solver.trail.literals == [1]
    assert solver.stats.restarts == 1
    assert not solver.restart_if_due()


def test_trail_checker_rejects_broken_reason() -> None:
    trail = Trail(3)
    trail.new_decision_level()
    trail.assign(1, None)
    trail.assign(2, Clause([2, 3]))

    with pytest.raises(InvariantViolation):
        trail.check_invariants()


def test_trail_checker_rejects_duplicate_variable() -> None:
    trail = Trail(2)
    trail.assign(1, None)
    trail.assign(1, None)

    with pytest.raises(InvariantViolation):
        trail.check_invariants()


def test_no_reduction_strategy_never_reduces() -> None:
    solver = Solver(_pigeonhole(4, 3), SolverConfig(strategy=ReductionStrategy.none(), reduce_base=1, reduce_inc=1))

    outcome = solver.solve()

    assert outcome.status == SolveStatus.UNSAT
    assert outcome.stats.reductions == 0
    assert outcome.stats.deleted == 0


def test_debug_mode_checks_reductions() -> None:
    config = SolverConfig(
        strategy=ReductionStrategy.from_name("lbd"), reduce_base=1, reduce_inc=1, check_invariants=True
    )

    outcome = solve(_pigeonhole(5, 4), config)

    assert outcome.status == SolveStatus.UNSAT
    assert outcome.stats.reductions > 0
    assert len(outcome.stats.deleted_fractions) == outcome.stats.reductions
