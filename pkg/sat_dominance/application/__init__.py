from . import dimacs, engine, harness, metrics, oracle, reduction

__all__ = ["dimacs", "engine", "harness", "metrics", "oracle", "reduction"]
