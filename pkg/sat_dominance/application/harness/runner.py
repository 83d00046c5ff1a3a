import time
from pathlib import Path

from loguru import logger
from pydantic import BaseModel

from sat_dominance.application.engine import solve
from sat_dominance.application.oracle import brute_force_sat
from sat_dominance.domain.config import RunConfig
from sat_dominance.domain.exceptions import InvariantViolation, SatDominanceException
from sat_dominance.domain.formula import CnfFormula
from sat_dominance.domain.outcome import InstanceStats, SolveOutcome
from sat_dominance.domain.types import InstanceStatus, SolveStatus
from sat_dominance.infrastructure.files_io import DimacsFileManager


class InstanceResult(BaseModel):
    stats: InstanceStats
    outcome: SolveOutcome


def _oracle_agreement(formula: CnfFormula, outcome: SolveOutcome, config: RunConfig) -> bool | None:
    if outcome.status == SolveStatus.UNKNOWN or formula.num_vars > config.oracle_limit.max_vars:
        return None

    expected = brute_force_sat(formula, config.oracle_limit).status
    agreement = expected == outcome.status
    if not agreement:
        logger.error(f"Oracle disagreement: solver answered {outcome.status}, enumeration answered {expected}.")

    return agreement


def solve_instance(path: str | Path, config: RunConfig, name: str | None = None) -> InstanceResult:
    """
    Reads, solves and optionally cross-checks one DIMACS instance.

    Raises:
        DimacsParseError: If the file is not valid DIMACS CNF.
        FileNotFoundError: If the file does not exist.
    """

    path = Path(path)
    parsed = DimacsFileManager.read(path)
    formula = parsed.formula

    started = time.perf_counter()
    outcome = solve(formula, config.solver_config())
    wall_time = time.perf_counter() - started

    agreement = _oracle_agreement(formula, outcome, config) if config.verify else None
    search = outcome.stats
    stats = InstanceStats(
        instance=name or path.name,
        strategy=config.strategy.label,
        status=InstanceStatus(outcome.status.value),
        wall_time=wall_time,
        conflicts=search.conflicts,
        decisions=search.decisions,
        propagations=search.propagations,
        restarts=search.restarts,
        reductions=search.reductions,
        total_learned=search.learned,
        total_deleted=search.deleted,
        mean_deleted_fraction=search.mean_deleted_fraction,
        reference_selections=search.reference_selections,
        oracle_agreement=agreement,
    )
    logger.info(
        f"Solved {stats.instance}: {stats.status} in {wall_time:.3f}s.",
        strategy=stats.strategy,
        conflicts=stats.conflicts,
        reductions=stats.reductions,
    )

    return InstanceResult(stats=stats, outcome=outcome)


def run_instance(path: str | Path, config: RunConfig, name: str | None = None) -> InstanceStats:
    """
    Like `solve_instance`, but input failures become an ERROR row instead of an exception.

    Raises:
        InvariantViolation: If a solver self-check fails.
    """

    path = Path(path)
    try:
        return solve_instance(path, config, name).stats
    except InvariantViolation:
        raise
    except (SatDominanceException, OSError, UnicodeDecodeError) as e:
        logger.error(f"Failed to solve {path}: {e!s}")

        return InstanceStats(instance=name or path.name, strategy=config.strategy.label, status=InstanceStatus.ERROR)
