from .base import ReductionHandler
from .dispatcher import NoReductionHandler, ReductionDispatcher, ReductionHandlerFactory
from .dominance import DominanceReductionHandler, alg2_dominates, is_eligible, min_deg_comp, reduce_dominance
from .schedule import should_reduce
from .sort_half import SortHalfReductionHandler, reduce_sort_half, worst_first

__all__ = [
    "DominanceReductionHandler",
    "NoReductionHandler",
    "ReductionDispatcher",
    "ReductionHandler",
    "ReductionHandlerFactory",
    "SortHalfReductionHandler",
    "alg2_dominates",
    "is_eligible",
    "min_deg_comp",
    "reduce_dominance",
    "reduce_sort_half",
    "should_reduce",
    "worst_first",
]
