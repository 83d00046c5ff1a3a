from . import clauses, config, exceptions, formula, measures, outcome, strategy, types

__all__ = [
    "clauses",
    "config",
    "exceptions",
    "formula",
    "measures",
    "outcome",
    "strategy",
    "types",
]
