from .analysis import analyze_conflict, compute_lbd
from .heuristics import RestartPolicy, VarOrder, decide, luby
from .solver import Solver, solve
from .trail import Trail

__all__ = [
    "RestartPolicy",
    "Solver",
    "Trail",
    "VarOrder",
    "analyze_conflict",
    "compute_lbd",
    "decide",
    "luby",
    "solve",
]
