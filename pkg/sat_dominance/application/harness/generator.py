from pathlib import Path

import numpy as np
from loguru import logger

from sat_dominance.domain.formula import CnfFormula
from sat_dominance.infrastructure.files_io import DimacsFileManager
from sat_dominance.settings import settings

PHASE_TRANSITION_RATIO = 4.26


def generate_random_ksat(num_vars: int, num_clauses: int, k: int = 3, seed: int | None = None) -> CnfFormula:
    """Uniform random k-SAT: each clause draws k distinct variables and independent signs."""

    if k < 1 or k > num_vars:
        raise ValueError(f"Clause width {k} must lie in [1, {num_vars}].")

    rng = np.random.default_rng(settings.RANDOM_SEED if seed is None else seed)
    clauses = []
    for _ in range(num_clauses):
        variables = rng.choice(num_vars, size=k, replace=False) + 1
        signs = rng.integers(0, 2, size=k) * 2 - 1
        clauses.append([int(literal) for literal in variables * signs])

    return CnfFormula(num_vars=num_vars, clauses=clauses)


def generate_corpus(
    directory: str | Path,
    count: int,
    num_vars: int,
    ratio: float = PHASE_TRANSITION_RATIO,
    k: int = 3,
    seed: int | None = None,
) -> list[Path]:
    """Writes `count` random k-SAT instances; instance i is generated with seed `seed + i`."""

    directory = Path(directory)
    seed = settings.RANDOM_SEED if seed is None else seed
    num_clauses = round(ratio * num_vars)

    paths = []
    for index in range(count):
        formula = generate_random_ksat(num_vars, num_clauses, k, seed + index)
        filename = f"rand{k}-v{num_vars}-c{num_clauses}-{index:04d}.cnf"
        paths.append(DimacsFileManager.write(directory / filename, formula))

    logger.info(f"Generated {count} instance(s) in {directory}.", num_vars=num_vars, num_clauses=num_clauses, k=k)

    return paths
