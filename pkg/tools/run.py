import sys
from pathlib import Path
from typing import NoReturn

import click
from loguru import logger
from pydantic import ValidationError

from sat_dominance import settings
from sat_dominance.application.harness import (
    CACTUS_COLUMNS,
    DELETION_PROFILE_COLUMNS,
    ERROR_EXIT_CODE,
    cactus_rows,
    cactus_table,
    common_solved,
    competition_lines,
    coverage_violations,
    emit_cactus,
    emit_deletion_profile,
    exit_code,
    generate_corpus,
    load_runs,
    run_corpus,
    solve_instance,
    solved_patterns,
    write_stats,
    write_summary,
)
from sat_dominance.application.harness.generator import PHASE_TRANSITION_RATIO
from sat_dominance.domain.config import RunConfig
from sat_dominance.domain.exceptions import SatDominanceException
from sat_dominance.domain.strategy import STRATEGY_NAMES, ReductionStrategy
from sat_dominance.infrastructure.files_io import CsvFileManager

FAILURES = (SatDominanceException, ValidationError, OSError, UnicodeDecodeError)


def _fail(ctx: click.Context, error: Exception) -> NoReturn:
    logger.error(f"{type(error).__name__}: {error!s}")
    click.echo(f"c error: {error!s}", err=True)
    ctx.exit(ERROR_EXIT_CODE)


def _run_config(
    strategy: str,
    measures: str,
    timeout: float,
    conflicts: int | None,
    seed: int,
    reduce_base: int,
    reduce_inc: int,
    **kwargs,
) -> RunConfig:
    return RunConfig(
        strategy=ReductionStrategy.from_name(strategy, measures),
        timeout=timeout,
        conflict_budget=conflicts,
        seed=seed,
        reduce_base=reduce_base,
        reduce_inc=reduce_inc,
        **kwargs,
    )


def _write_table(output: Path | None, columns: tuple[str, ...], rows: list[dict[str, str]]) -> None:
    if output is None:
        CsvFileManager.write_stream(sys.stdout, columns, rows)
    else:
        path = CsvFileManager.write(output, columns, rows)
        logger.info(f"Table written to {path}.")


def budget_options(function):
    options = [
        click.option(
            "--strategy",
            type=click.Choice(STRATEGY_NAMES, case_sensitive=False),
            default=settings.DEFAULT_STRATEGY,
            show_default=True,
            help="Learned clause database reduction strategy.",
        ),
        click.option(
            "--measures",
            default=settings.DEFAULT_MEASURES,
            show_default=True,
            help="Comma separated measures compared by the degcomp strategy.",
        ),
        click.option(
            "--timeout",
            type=float,
            default=settings.DEFAULT_TIMEOUT_SECONDS,
            show_default=True,
            help="Wall-clock budget per instance in seconds; 0 disables it.",
        ),
        click.option("--conflicts", type=int, default=None, help="Conflict budget per instance."),
        click.option("--seed", type=int, default=settings.RANDOM_SEED, show_default=True, help="Solver seed."),
        click.option(
            "--reduce-base",
            type=int,
            default=settings.REDUCE_BASE,
            show_default=True,
            help="Conflicts before the first reduction.",
        ),
        click.option(
            "--reduce-inc",
            type=int,
            default=settings.REDUCE_INC,
            show_default=True,
            help="Growth of the reduction interval after each reduction.",
        ),
        click.option(
            "--verify",
            is_flag=True,
            default=False,
            help="Cross-check answers against exhaustive enumeration on small instances.",
        ),
    ]
    for option in reversed(options):
        function = option(function)

    return function


@click.group(
    help="""
SAT dominance project CLI v0.0.1.

A CDCL SAT solver whose learned clause database is reduced either by
sorting on a single measure or by dominance over several measures.

Examples:

  \b
  # Solve one instance with the dominance-based reduction
  python -m tools.run solve instance.cnf

  \b
  # Benchmark a corpus with the LBD strategy and a conflict budget
  python -m tools.run bench corpus/ --strategy lbd --conflicts 50000 --stats-csv results/lbd.csv

  \b
  # Compare the runs
  python -m tools.run crosstab results/*.csv
"""
)
@click.option(
    "--log-level",
    type=click.Choice(["TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL"], case_sensitive=False),
    default="INFO",
    show_default=True,
    help="Minimum level of the log messages written to stderr.",
)
def main(log_level: str) -> None:
    logger.remove()
    logger.add(sys.stderr, level=log_level.upper())


@main.command(help="Solve one DIMACS CNF instance and answer in the SAT competition format.")
@click.argument("instance", type=click.Path(path_type=Path))
@budget_options
@click.pass_context
def solve(ctx: click.Context, instance: Path, verify: bool, **budget) -> None:
    try:
        config = _run_config(**budget, verify=verify)
        result = solve_instance(instance, config)
    except FAILURES as e:
        _fail(ctx, e)

    for line in competition_lines(result.outcome):
        click.echo(line)
    if result.stats.oracle_agreement is not None:
        click.echo(f"c oracle agreement: {str(result.stats.oracle_agreement).lower()}")

    ctx.exit(exit_code(result.outcome.status))


@main.command(help="Run a corpus (directory of .cnf files or list file) and emit the statistics CSV.")
@click.argument("source", type=click.Path(path_type=Path))
@budget_options
@click.option("--jobs", type=int, default=1, show_default=True, help="Number of worker processes.")
@click.option("--stats-csv", type=click.Path(path_type=Path), default=None, help="Statistics CSV; stdout if omitted.")
@click.option("--cactus", type=click.Path(path_type=Path), default=None, help="Cactus plot data CSV.")
@click.option("--summary-json", type=click.Path(path_type=Path), default=None, help="Corpus summary JSON.")
@click.pass_context
def bench(
    ctx: click.Context,
    source: Path,
    verify: bool,
    jobs: int,
    stats_csv: Path | None,
    cactus: Path | None,
    summary_json: Path | None,
    **budget,
) -> None:
    try:
        config = _run_config(
            **budget, verify=verify, jobs=jobs, stats_csv=stats_csv, cactus=cactus, summary_json=summary_json
        )
        run = run_corpus(source, config)
    except FAILURES as e:
        _fail(ctx, e)

    write_stats(run, config.stats_csv if config.stats_csv is not None else sys.stdout)
    if config.cactus is not None:
        _write_table(config.cactus, CACTUS_COLUMNS, cactus_rows(cactus_table({run.summary.strategy: run.rows})))
    if config.summary_json is not None:
        write_summary(run.summary, config.summary_json)

    logger.info(
        f"{run.summary.solved_label}, average time {run.summary.average_time}.",
        deleted_fraction_mean=run.summary.deleted_fraction_mean,
        deleted_fraction_std=run.summary.deleted_fraction_std,
    )


@main.command(help="Write a corpus of uniform random k-SAT instances.")
@click.argument("directory", type=click.Path(path_type=Path))
@click.option("--count", type=int, default=100, show_default=True, help="Number of instances.")
@click.option("--num-vars", type=int, default=50, show_default=True, help="Variables per instance.")
@click.option(
    "--ratio", type=float, default=PHASE_TRANSITION_RATIO, show_default=True, help="Clause to variable ratio."
)
@click.option("--k", "k", type=int, default=3, show_default=True, help="Literals per clause.")
@click.option("--seed", type=int, default=settings.RANDOM_SEED, show_default=True, help="Seed of the first instance.")
@click.pass_context
def generate(ctx: click.Context, directory: Path, count: int, num_vars: int, ratio: float, k: int, seed: int) -> None:
    try:
        generate_corpus(directory, count, num_vars, ratio, k, seed)
    except (ValueError, OSError) as e:
        _fail(ctx, e)


@main.command(help="Emit cactus plot data (strategy, rank, time) from statistics CSVs.")
@click.argument("csv_files", nargs=-1, required=True, type=click.Path(exists=True, path_type=Path))
@click.option("--output", type=click.Path(path_type=Path), default=None, help="Output CSV; stdout if omitted.")
def cactus(csv_files: tuple[Path, ...], output: Path | None) -> None:
    _write_table(output, CACTUS_COLUMNS, cactus_rows(emit_cactus(csv_files)))


@main.command(help="Cross-tabulate the instances solved by the runs in statistics CSVs.")
@click.argument("csv_files", nargs=-1, required=True, type=click.Path(exists=True, path_type=Path))
@click.option("--patterns", is_flag=True, default=False, help="Count instances per solved-by pattern instead.")
@click.option("--reference", multiple=True, help="Reference strategy for the coverage check; repeatable.")
@click.option("--candidate", default=None, help="Strategy expected to solve everything the references all solve.")
@click.pass_context
def crosstab(
    ctx: click.Context, csv_files: tuple[Path, ...], patterns: bool, reference: tuple[str, ...], candidate: str | None
) -> None:
    runs = load_runs(csv_files)
    strategies = list(runs)

    if patterns:
        rows = [
            {"solved_by": "+".join(pattern) or "-", "instances": str(count)}
            for pattern, count in solved_patterns(runs).items()
        ]
        _write_table(None, ("solved_by", "instances"), rows)
    else:
        matrix = common_solved(runs)
        rows = [{"strategy": a, **{b: str(matrix[a][b]) for b in strategies}} for a in strategies]
        _write_table(None, ("strategy", *strategies), rows)

    if candidate is None:
        return

    try:
        violations = coverage_violations(runs, reference, candidate)
    except SatDominanceException as e:
        _fail(ctx, e)

    for instance in violations:
        logger.warning(f"{instance} is solved by {', '.join(reference)} but not by {candidate}.")
    logger.info(f"{len(violations)} coverage violation(s) for {candidate}.")
    if violations:
        ctx.exit(ERROR_EXIT_CODE)


@main.command(help="Emit the deleted fraction versus time profile of the solved instances of a run.")
@click.argument("csv_file", type=click.Path(exists=True, path_type=Path))
@click.option("--output", type=click.Path(path_type=Path), default=None, help="Output CSV; stdout if omitted.")
def profile(csv_file: Path, output: Path | None) -> None:
    rows = [point.to_row() for point in emit_deletion_profile(csv_file)]
    _write_table(output, DELETION_PROFILE_COLUMNS, rows)


if __name__ == "__main__":
    main()
