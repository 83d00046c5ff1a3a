from .sat import brute_force_sat, is_entailed
from .skyline import brute_force_undominated, dominated_by_reference

__all__ = ["brute_force_sat", "brute_force_undominated", "dominated_by_reference", "is_entailed"]
