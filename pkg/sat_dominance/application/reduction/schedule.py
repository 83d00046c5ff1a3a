from sat_dominance.domain.config import SolverConfig


def should_reduce(conflicts_since_reduction: int, reductions_so_far: int, config: SolverConfig) -> bool:
    return conflicts_since_reduction >= config.reduce_base + config.reduce_inc * reductions_so_far
