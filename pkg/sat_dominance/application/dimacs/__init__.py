from .parser import parse_dimacs
from .writer import write_dimacs

__all__ = ["parse_dimacs", "write_dimacs"]
