from .activity import bump_clause_activity, decay_clause_activity
from .dominance import dominates_strict, dominates_weak, prefer
from .normalization import deg_comp, deg_comp_exact, normalize, normalize_value

__all__ = [
    "bump_clause_activity",
    "decay_clause_activity",
    "deg_comp",
    "deg_comp_exact",
    "dominates_strict",
    "dominates_weak",
    "normalize",
    "normalize_value",
    "prefer",
]
