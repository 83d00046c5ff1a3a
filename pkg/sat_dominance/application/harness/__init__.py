from .corpus import (
    CorpusEntry,
    CorpusRun,
    collect_instances,
    load_runs,
    load_stats,
    run_corpus,
    summarize,
    write_stats,
    write_summary,
)
from .crosstab import common_solved, coverage_violations, solved_patterns, solved_sets
from .generator import generate_corpus, generate_random_ksat
from .output import ERROR_EXIT_CODE, competition_lines, exit_code, status_line
from .profiles import (
    CACTUS_COLUMNS,
    DELETION_PROFILE_COLUMNS,
    DeletionProfilePoint,
    cactus_rows,
    cactus_series,
    cactus_table,
    deletion_profile,
    emit_cactus,
    emit_deletion_profile,
)
from .runner import InstanceResult, run_instance, solve_instance

__all__ = [
    "CACTUS_COLUMNS",
    "DELETION_PROFILE_COLUMNS",
    "ERROR_EXIT_CODE",
    "CorpusEntry",
    "CorpusRun",
    "DeletionProfilePoint",
    "InstanceResult",
    "cactus_rows",
    "cactus_series",
    "cactus_table",
    "collect_instances",
    "common_solved",
    "competition_lines",
    "coverage_violations",
    "deletion_profile",
    "emit_cactus",
    "emit_deletion_profile",
    "exit_code",
    "generate_corpus",
    "generate_random_ksat",
    "load_runs",
    "load_stats",
    "run_corpus",
    "run_instance",
    "solve_instance",
    "solved_patterns",
    "solved_sets",
    "status_line",
    "summarize",
    "write_stats",
    "write_summary",
]
